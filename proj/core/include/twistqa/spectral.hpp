#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistqa/dense.hpp"
#include "twistqa/models.hpp"

namespace tqa {

// Eigenvalues closer than this are treated as degenerate when ordering.
inline constexpr double kDegeneracyTolerance = 1e-12;

struct Eigensystem {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // column k belongs to values(k)
};

/// Hermitian eigendecomposition with a deterministic convention.
///
/// Eigenvalues are ascending; a run of eigenvalues within 1e-12 is ordered
/// by the index of each eigenvector's largest-magnitude component, and every
/// eigenvector is rotated so that component is real and positive. Throws
/// DomainError when ||op - op^dagger||_max > 1e-9.
Eigensystem eigendecompose(const DenseOperator& op);

struct SpectrumTrace {
  std::vector<double> times;
  std::vector<std::vector<double>> levels;  // levels[k] ascending at times[k]
  std::vector<Matrix> vectors;              // filled when requested; lowest levels only
  std::vector<std::string> continuity_warnings;
};

// Spectra of H(t) at n_points uniform times on [0, T], keeping the lowest
// n_levels (0 keeps all). Eigenvector continuity between consecutive points
// is checked per level and failures are recorded, not thrown.
SpectrumTrace spectrum_trace(const AnnealSchedule& schedule, int n_points, int n_levels, bool keep_vectors = false,
                             int jobs = 1);

struct GapTrace {
  int level = 1;
  std::vector<double> times;
  std::vector<double> gaps;  // E_level - E_0
  double min_gap = 0.0;
  double t_at_min = 0.0;
};

GapTrace gap_trace(const SpectrumTrace& trace, int level);

/// Transition amplitudes |<E_j| dH/dt |E_0>| and A_j = amplitude / (E_j - E_0)^2
/// for j = 1..max_level. A_j is empty where E_j - E_0 < 1e-10.
struct AdiabaticTrace {
  std::vector<double> times;
  std::vector<int> levels;
  std::vector<std::vector<double>> numerators;              // [level index][time index]
  std::vector<std::vector<std::optional<double>>> metrics;  // same layout
};

AdiabaticTrace adiabatic_trace(const AnnealSchedule& schedule, int n_points, int max_level, int jobs = 1);

}  // namespace tqa
