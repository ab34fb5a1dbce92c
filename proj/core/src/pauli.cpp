#include "twistqa/pauli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "twistqa/error.hpp"

namespace tqa {

namespace {

void validate_axes(std::string_view axes, int n_qubits) {
  if (static_cast<int>(axes.size()) != n_qubits) {
    throw DimensionError("Pauli axes '" + std::string(axes) + "' has length " + std::to_string(axes.size()) +
                         ", expected " + std::to_string(n_qubits));
  }
  if (axes.find_first_not_of("IXYZ") != std::string_view::npos) {
    throw DomainError("Pauli axes '" + std::string(axes) + "' contains a letter outside IXYZ");
  }
}

struct SiteProduct {
  cplx phase;
  char axis;
};

// a * b for single-site Paulis.
SiteProduct multiply_site(char a, char b) {
  constexpr cplx i{0.0, 1.0};
  if (a == 'I') return {1.0, b};
  if (b == 'I') return {1.0, a};
  if (a == b) return {1.0, 'I'};
  if (a == 'X') return b == 'Y' ? SiteProduct{i, 'Z'} : SiteProduct{-i, 'Y'};
  if (a == 'Y') return b == 'Z' ? SiteProduct{i, 'X'} : SiteProduct{-i, 'Z'};
  return b == 'X' ? SiteProduct{i, 'Y'} : SiteProduct{-i, 'X'};  // a == 'Z'
}

const Matrix& pauli_matrix(char axis) {
  static const std::array<Matrix, 4> mats = [] {
    std::array<Matrix, 4> m{Matrix(2, 2), Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)};
    const cplx i{0.0, 1.0};
    m[0] << 1.0, 0.0, 0.0, 1.0;
    m[1] << 0.0, 1.0, 1.0, 0.0;
    m[2] << 0.0, -i, i, 0.0;
    m[3] << 1.0, 0.0, 0.0, -1.0;
    return m;
  }();
  switch (axis) {
    case 'X': return mats[1];
    case 'Y': return mats[2];
    case 'Z': return mats[3];
    default: return mats[0];
  }
}

}  // namespace

PauliSum::PauliSum(int n_qubits, std::vector<PauliTerm> terms, bool hermitian)
    : n_qubits_(n_qubits), terms_(std::move(terms)), hermitian_(hermitian) {
  if (n_qubits_ < 1) throw DomainError("PauliSum needs at least one qubit");
  for (const auto& t : terms_) validate_axes(t.axes, n_qubits_);
}

PauliSum PauliSum::with_hermitian(bool flag) const {
  PauliSum out = *this;
  out.hermitian_ = flag;
  return out;
}

PauliSum& PauliSum::add(cplx coefficient, std::string_view axes) {
  validate_axes(axes, n_qubits_);
  terms_.push_back({coefficient, std::string(axes)});
  return *this;
}

cplx PauliSum::coefficient(std::string_view axes) const {
  cplx total{0.0, 0.0};
  for (const auto& t : terms_) {
    if (t.axes == axes) total += t.coefficient;
  }
  return total;
}

PauliSum canonicalize(const PauliSum& s) {
  std::map<std::string, cplx> merged;
  for (const auto& t : s.terms()) merged[t.axes] += t.coefficient;
  std::vector<PauliTerm> terms;
  terms.reserve(merged.size());
  for (auto& [axes, c] : merged) {
    if (std::abs(c) >= kDropTolerance) terms.push_back({c, axes});
  }
  return PauliSum(s.n_qubits(), std::move(terms), s.hermitian());
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("PauliSum +: qubit count mismatch");
  std::vector<PauliTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return PauliSum(a.n_qubits(), std::move(terms), a.hermitian() && b.hermitian());
}

PauliSum operator*(cplx factor, const PauliSum& s) {
  std::vector<PauliTerm> terms = s.terms();
  for (auto& t : terms) t.coefficient *= factor;
  return PauliSum(s.n_qubits(), std::move(terms), s.hermitian() && factor.imag() == 0.0);
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("PauliSum *: qubit count mismatch");
  const auto n = static_cast<std::size_t>(a.n_qubits());
  std::vector<PauliTerm> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      PauliTerm t{ta.coefficient * tb.coefficient, std::string(n, 'I')};
      for (std::size_t k = 0; k < n; ++k) {
        const auto [phase, axis] = multiply_site(ta.axes[k], tb.axes[k]);
        t.coefficient *= phase;
        t.axes[k] = axis;
      }
      terms.push_back(std::move(t));
    }
  }
  return canonicalize(PauliSum(a.n_qubits(), std::move(terms), false));
}

PauliSum single_site(int n_qubits, int site, char axis, cplx coefficient) {
  if (site < 0 || site >= n_qubits) throw DomainError("single_site: site out of range");
  std::string axes(static_cast<std::size_t>(n_qubits), 'I');
  axes[static_cast<std::size_t>(site)] = axis;
  PauliSum s(n_qubits, {}, coefficient.imag() == 0.0);
  s.add(coefficient, axes);
  return s;
}

DenseOperator to_dense(const PauliSum& s, int max_qubits) {
  if (s.n_qubits() > max_qubits) {
    throw DimensionError("to_dense: " + std::to_string(s.n_qubits()) + " qubits exceeds the limit of " +
                         std::to_string(max_qubits));
  }
  const Eigen::Index dim = Eigen::Index{1} << s.n_qubits();
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& t : s.terms()) {
    Matrix product = pauli_matrix(t.axes[0]);
    for (std::size_t k = 1; k < t.axes.size(); ++k) product = kron(product, pauli_matrix(t.axes[k]));
    out += t.coefficient * product;
  }
  return DenseOperator(std::move(out));
}

cplx term_trace(const PauliTerm& term, const DensityMatrix& rho) {
  const auto n = static_cast<int>(term.axes.size());
  if (rho.dim() != (std::size_t{1} << n)) throw DimensionError("term_trace: dimension mismatch");
  // P|b> = w(b) |b ^ flip>, so Tr(P rho) = sum_b w(b) rho(b, b ^ flip).
  std::size_t flip = 0;
  for (int k = 0; k < n; ++k) {
    const char a = term.axes[static_cast<std::size_t>(k)];
    if (a == 'X' || a == 'Y') flip |= std::size_t{1} << (n - 1 - k);
  }
  constexpr cplx i{0.0, 1.0};
  cplx total{0.0, 0.0};
  for (std::size_t b = 0; b < rho.dim(); ++b) {
    cplx w{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
      const bool bit = (b >> (n - 1 - k)) & 1U;
      switch (term.axes[static_cast<std::size_t>(k)]) {
        case 'Y': w *= bit ? -i : i; break;
        case 'Z': if (bit) w = -w; break;
        default: break;
      }
    }
    total += w * rho(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ flip));
  }
  return term.coefficient * total;
}

namespace {
double checked_real(cplx value) {
  if (std::abs(value.imag()) > 1e-9) {
    std::ostringstream msg;
    msg << "expectation has imaginary part " << value.imag() << "; operator is not Hermitian";
    throw NumericalError(msg.str());
  }
  return value.real();
}
}  // namespace

double expectation(const PauliSum& op, const DensityMatrix& rho) {
  if (rho.dim() != (std::size_t{1} << op.n_qubits())) throw DimensionError("expectation: dimension mismatch");
  cplx total{0.0, 0.0};
  for (const auto& t : op.terms()) total += term_trace(t, rho);
  return checked_real(total);
}

double expectation(const DenseOperator& op, const DensityMatrix& rho) {
  if (op.dim() != rho.dim()) throw DimensionError("expectation: dimension mismatch");
  // Tr(H rho) = sum_ab H(a,b) rho(b,a)
  const cplx tr = op.matrix().cwiseProduct(rho.matrix().transpose()).sum();
  return checked_real(tr);
}

PauliSum parse_pauli_sum(std::istream& in, const std::string& origin) {
  std::vector<PauliTerm> terms;
  int n_qubits = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string re_s, im_s, axes, extra;
    if (!(fields >> re_s >> im_s >> axes)) throw ParseError(origin, line_no, "expected `<re> <im> <axes>`");
    if (fields >> extra) throw ParseError(origin, line_no, "unexpected trailing field '" + extra + "'");

    auto parse_double = [&](const std::string& tok) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
        throw ParseError(origin, line_no, "invalid number '" + tok + "'");
      }
      return v;
    };
    const cplx c{parse_double(re_s), parse_double(im_s)};
    if (axes.find_first_not_of("IXYZ") != std::string::npos) {
      throw ParseError(origin, line_no, "axes '" + axes + "' must use only I, X, Y, Z");
    }
    if (n_qubits == 0) {
      n_qubits = static_cast<int>(axes.size());
    } else if (static_cast<int>(axes.size()) != n_qubits) {
      throw ParseError(origin, line_no,
                       "axes '" + axes + "' has " + std::to_string(axes.size()) + " qubits, expected " +
                           std::to_string(n_qubits));
    }
    terms.push_back({c, axes});
  }
  if (n_qubits == 0) throw ParseError(origin, 0, "no Pauli terms found");
  const bool real = std::all_of(terms.begin(), terms.end(), [](const PauliTerm& t) { return t.coefficient.imag() == 0.0; });
  return PauliSum(n_qubits, std::move(terms), real);
}

PauliSum read_pauli_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return parse_pauli_sum(in, path.string());
}

void write_pauli_sum(std::ostream& out, const PauliSum& s) {
  const auto old = out.precision(17);
  for (const auto& t : s.terms()) {
    out << t.coefficient.real() << ' ' << t.coefficient.imag() << ' ' << t.axes << '\n';
  }
  out.precision(old);
}

}  // namespace tqa
