#pragma once

#include <cstddef>

#include "twistqa/dense.hpp"

namespace tqa {

// Tolerances a state must meet to count as a physical density matrix.
struct StateTolerances {
  double hermiticity = 1e-9;
  double trace = 1e-8;
  double min_eigenvalue = -1e-7;
};

/// Open-system state rho on 2^n dimensions.
///
/// Construction through `from_matrix` validates Hermiticity, unit trace and
/// approximate positivity. `unchecked` skips that for states produced inside
/// the integrator, where invariants are monitored separately.
class DensityMatrix {
 public:
  DensityMatrix() = default;

  static DensityMatrix from_matrix(Matrix rho, const StateTolerances& tol = {});
  static DensityMatrix unchecked(Matrix rho);
  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(rho_.rows()); }
  const Matrix& matrix() const noexcept { return rho_; }
  cplx operator()(Eigen::Index r, Eigen::Index c) const { return rho_(r, c); }

  cplx trace() const { return rho_.trace(); }
  double trace_drift() const { return std::abs(rho_.trace() - cplx{1.0, 0.0}); }
  double hermiticity_drift() const { return hermiticity_defect(rho_); }
  double min_eigenvalue() const;

  // Throws NumericalError naming the first violated invariant.
  void validate(const StateTolerances& tol = {}) const;

 private:
  explicit DensityMatrix(Matrix rho);
  Matrix rho_;
};

}  // namespace tqa
