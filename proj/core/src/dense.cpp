#include "twistqa/dense.hpp"

#include <bit>
#include <string>

#include "twistqa/error.hpp"

namespace tqa {

bool is_power_of_two(std::size_t n) noexcept { return std::has_single_bit(n); }

int qubit_count_for_dim(std::size_t dim) {
  if (!is_power_of_two(dim)) {
    throw DimensionError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return std::countr_zero(dim);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& m) { return max_abs_diff(m, m.adjoint()); }

DenseOperator::DenseOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw DimensionError("DenseOperator must be square, got " + std::to_string(m_.rows()) + "x" +
                         std::to_string(m_.cols()));
  }
  qubit_count_for_dim(static_cast<std::size_t>(m_.rows()));
}

DenseOperator DenseOperator::zero(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return DenseOperator(Matrix::Zero(d, d));
}

DenseOperator DenseOperator::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return DenseOperator(Matrix::Identity(d, d));
}

DenseOperator DenseOperator::adjoint() const { return DenseOperator(m_.adjoint()); }

bool DenseOperator::is_hermitian(double tol) const { return hermiticity_defect(m_) <= tol; }

namespace {
void require_same_dim(const DenseOperator& a, const DenseOperator& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}
}  // namespace

DenseOperator matmul(const DenseOperator& a, const DenseOperator& b) {
  require_same_dim(a, b, "matmul");
  return DenseOperator(a.matrix() * b.matrix());
}

DenseOperator add(const DenseOperator& a, const DenseOperator& b) {
  require_same_dim(a, b, "add");
  return DenseOperator(a.matrix() + b.matrix());
}

DenseOperator scale(const DenseOperator& a, cplx factor) { return DenseOperator(factor * a.matrix()); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace tqa
