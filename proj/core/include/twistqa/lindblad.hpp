#pragma once

#include <vector>

#include "twistqa/dense.hpp"
#include "twistqa/density_matrix.hpp"
#include "twistqa/models.hpp"

namespace tqa {

// Integration aborts once |Tr rho - 1| exceeds this.
inline constexpr double kTraceAbortThreshold = 1e-4;
// Final state is re-Hermitized and renormalized when drift exceeds this.
inline constexpr double kRenormalizeThreshold = 1e-10;

struct StateSample {
  double t = 0.0;
  DensityMatrix state;
};

struct EvolutionDiagnostics {
  int steps = 0;
  double max_trace_drift = 0.0;        // over samples and the raw final state
  double max_hermiticity_drift = 0.0;  // same points
  bool renormalized = false;
};

struct EvolutionResult {
  DensityMatrix final_state;
  std::vector<StateSample> samples;
  EvolutionDiagnostics diagnostics;
};

// |phi_0><phi_0| for the lowest eigenvector (eigendecompose tie-break).
// Throws DomainError for a non-Hermitian operator.
DensityMatrix ground_state_density(const DenseOperator& op);

// W(a,b) = gamma * sum_n (s_n(a) s_n(b) - 1), s_n = ±1 the Z_n eigenvalue of
// basis state a. Z_n rho Z_n - rho summed over sites is W ∘ rho.
Eigen::MatrixXd dephasing_weights(int n_qubits, double gamma);

// -i[H, rho] + gamma * sum_n (Z_n rho Z_n - rho).
Matrix lindblad_rhs(const DensityMatrix& rho, const DenseOperator& H, double gamma, int n_qubits);

/// Fixed-step RK4 integration of the dephasing master equation along the
/// schedule, with H evaluated at the RK4 stage times.
///
/// `sample_count` evenly spaced snapshots are kept (t = 0 and t = T
/// included when sample_count >= 2; only t = T when it is 1). Throws
/// NumericalError when the trace drifts past kTraceAbortThreshold or the
/// state becomes non-finite, and when `initial` violates the state invariants.
EvolutionResult evolve(const DensityMatrix& initial, const AnnealSchedule& schedule, const AnnealConfig& config,
                       int sample_count = 0);

}  // namespace tqa
