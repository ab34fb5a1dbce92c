#include "twistqa/density_matrix.hpp"

#include <cmath>
#include <sstream>

#include "twistqa/error.hpp"

namespace tqa {

DensityMatrix::DensityMatrix(Matrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols()) throw DimensionError("density matrix must be square");
  qubit_count_for_dim(static_cast<std::size_t>(rho_.rows()));
}

DensityMatrix DensityMatrix::from_matrix(Matrix rho, const StateTolerances& tol) {
  DensityMatrix out(std::move(rho));
  out.validate(tol);
  return out;
}

DensityMatrix DensityMatrix::unchecked(Matrix rho) { return DensityMatrix(std::move(rho)); }

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-9) {
    throw DomainError("pure state must be normalized, |psi| = " + std::to_string(norm));
  }
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(dim));
}

double DensityMatrix::min_eigenvalue() const {
  const Matrix herm = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void DensityMatrix::validate(const StateTolerances& tol) const {
  std::ostringstream msg;
  if (!rho_.allFinite()) {
    throw NumericalError("density matrix has non-finite entries");
  }
  if (const double h = hermiticity_drift(); h > tol.hermiticity) {
    msg << "density matrix not Hermitian: defect " << h << " > " << tol.hermiticity;
    throw NumericalError(msg.str());
  }
  if (const double t = trace_drift(); t > tol.trace) {
    msg << "density matrix trace drift " << t << " > " << tol.trace;
    throw NumericalError(msg.str());
  }
  if (const double e = min_eigenvalue(); e < tol.min_eigenvalue) {
    msg << "density matrix not positive: smallest eigenvalue " << e;
    throw NumericalError(msg.str());
  }
}

}  // namespace tqa
