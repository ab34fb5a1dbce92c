#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace tqa {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr int kDefaultMaxQubits = 12;

bool is_power_of_two(std::size_t n) noexcept;

// Number of qubits n with 2^n == dim. Throws DimensionError otherwise.
int qubit_count_for_dim(std::size_t dim);

// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

// ||m - m^dagger||_max.
double hermiticity_defect(const Matrix& m);

/// A complex operator on the full 2^n-dimensional Hilbert space.
///
/// Values are immutable once built; every arithmetic helper returns a new
/// operator and checks that both operands live on the same space.
class DenseOperator {
 public:
  DenseOperator() = default;

  // Throws DimensionError unless `m` is square with power-of-two size.
  explicit DenseOperator(Matrix m);

  static DenseOperator zero(std::size_t dim);
  static DenseOperator identity(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  int n_qubits() const { return qubit_count_for_dim(dim()); }
  const Matrix& matrix() const noexcept { return m_; }
  cplx operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

  DenseOperator adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;

 private:
  Matrix m_;
};

DenseOperator matmul(const DenseOperator& a, const DenseOperator& b);
DenseOperator add(const DenseOperator& a, const DenseOperator& b);
DenseOperator scale(const DenseOperator& a, cplx factor);

inline DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) { return matmul(a, b); }
inline DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) { return add(a, b); }
inline DenseOperator operator*(cplx factor, const DenseOperator& a) { return scale(a, factor); }

// Kronecker product a (x) b; a occupies the more significant index bits.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace tqa
