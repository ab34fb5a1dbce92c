#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistqa/dense.hpp"
#include "twistqa/density_matrix.hpp"

namespace tqa {

// Coefficients with modulus below this are dropped by canonicalize().
inline constexpr double kDropTolerance = 1e-14;

/// c * (sigma^{a_0} (x) ... (x) sigma^{a_{n-1}}), axes spelled over "IXYZ".
/// Character k acts on qubit k; qubit 0 is the most significant bit of the
/// computational-basis index.
struct PauliTerm {
  cplx coefficient{0.0, 0.0};
  std::string axes;

  bool is_identity() const noexcept { return axes.find_first_not_of('I') == std::string::npos; }
};

class PauliSum {
 public:
  // Throws DomainError for n_qubits < 1 and DimensionError/ParseError for
  // terms whose axes have the wrong length or letters outside IXYZ.
  explicit PauliSum(int n_qubits, std::vector<PauliTerm> terms = {}, bool hermitian = true);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  // Caller-declared flag; sums of Hermitian sums stay Hermitian, products do not.
  bool hermitian() const noexcept { return hermitian_; }
  PauliSum with_hermitian(bool flag) const;

  PauliSum& add(cplx coefficient, std::string_view axes);

  // Coefficient of `axes` after merging duplicates (0 if absent).
  cplx coefficient(std::string_view axes) const;

 private:
  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
  bool hermitian_ = true;
};

// Merge equal axes, drop |c| < kDropTolerance, sort axes lexicographically.
PauliSum canonicalize(const PauliSum& s);

PauliSum operator+(const PauliSum& a, const PauliSum& b);
PauliSum operator*(cplx factor, const PauliSum& s);
// Operator product with single-site Pauli algebra; result is canonical.
PauliSum operator*(const PauliSum& a, const PauliSum& b);

// Single-site Pauli on qubit `site` of an n-qubit register.
PauliSum single_site(int n_qubits, int site, char axis, cplx coefficient = 1.0);

DenseOperator to_dense(const PauliSum& s, int max_qubits = kDefaultMaxQubits);

// Tr(P rho) for one Pauli string, evaluated from the bit structure of P
// without forming its matrix.
cplx term_trace(const PauliTerm& term, const DensityMatrix& rho);

// Re Tr(H rho). Throws DimensionError on mismatched sizes and
// NumericalError if |Im Tr(H rho)| > 1e-9.
double expectation(const PauliSum& op, const DensityMatrix& rho);
double expectation(const DenseOperator& op, const DensityMatrix& rho);

// Text format, one term per line: `<re> <im> <axes>`; `#` starts a comment line.
PauliSum parse_pauli_sum(std::istream& in, const std::string& origin = "<stream>");
PauliSum read_pauli_file(const std::filesystem::path& path);
void write_pauli_sum(std::ostream& out, const PauliSum& s);

}  // namespace tqa
