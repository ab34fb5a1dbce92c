#include "twistqa/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "twistqa/error.hpp"
#include "twistqa/parallel.hpp"

namespace tqa {

namespace {

Eigen::Index dominant_index(const StateVector& v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    // strict comparison keeps the first index on exact ties
    if (const double a = std::abs(v(k)); a > best_abs + 1e-12) {
      best_abs = a;
      best = k;
    }
  }
  return best;
}

std::vector<double> uniform_times(double T, int n_points) {
  std::vector<double> times(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k) {
    times[static_cast<std::size_t>(k)] = k == n_points - 1 ? T : T * static_cast<double>(k) / (n_points - 1);
  }
  return times;
}

}  // namespace

Eigensystem eigendecompose(const DenseOperator& op) {
  const Matrix& m = op.matrix();
  if (const double defect = hermiticity_defect(m); defect > 1e-9) {
    std::ostringstream msg;
    msg << "eigendecompose: operator is not Hermitian (defect " << defect << ")";
    throw DomainError(msg.str());
  }
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecompose: solver did not converge");

  const Eigen::Index d = herm.rows();
  Matrix vecs = solver.eigenvectors();
  std::vector<Eigen::Index> dominant(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) {
    StateVector v = vecs.col(k);
    const Eigen::Index idx = dominant_index(v);
    const cplx c = v(idx);
    vecs.col(k) = v * (std::conj(c) / std::abs(c));
    vecs(idx, k) = std::abs(c);
    dominant[static_cast<std::size_t>(k)] = idx;
  }

  const Eigen::VectorXd& vals = solver.eigenvalues();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  // Eigen returns ascending values; reorder only inside degenerate runs.
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start + 1;
    while (end < order.size() && vals(static_cast<Eigen::Index>(end)) - vals(static_cast<Eigen::Index>(end - 1)) <=
                                     kDegeneracyTolerance) {
      ++end;
    }
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start), order.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](Eigen::Index a, Eigen::Index b) {
                       return dominant[static_cast<std::size_t>(a)] < dominant[static_cast<std::size_t>(b)];
                     });
    start = end;
  }

  Eigensystem out{Eigen::VectorXd(d), Matrix(d, d)};
  for (Eigen::Index k = 0; k < d; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = vals(src);
    out.vectors.col(k) = vecs.col(src);
  }
  return out;
}

SpectrumTrace spectrum_trace(const AnnealSchedule& schedule, int n_points, int n_levels, bool keep_vectors, int jobs) {
  if (n_points < 2) throw DomainError("spectrum_trace: n_points must be at least 2");
  const auto dim = static_cast<int>(schedule.dim());
  if (n_levels <= 0 || n_levels > dim) n_levels = dim;

  SpectrumTrace trace;
  trace.times = uniform_times(schedule.T(), n_points);
  const auto count = trace.times.size();
  trace.levels.resize(count);
  std::vector<Matrix> vectors(count);
  parallel_for(count, jobs, [&](std::size_t k) {
    const Eigensystem es = eigendecompose(hamiltonian_at(schedule, trace.times[k]));
    trace.levels[k].assign(es.values.data(), es.values.data() + n_levels);
    vectors[k] = es.vectors.leftCols(n_levels);
  });

  for (std::size_t k = 0; k + 1 < count; ++k) {
    for (int level = 0; level < n_levels; ++level) {
      const double overlap = std::abs(vectors[k].col(level).dot(vectors[k + 1].col(level)));
      if (overlap <= 0.9) {
        std::ostringstream msg;
        msg << "level " << level << " eigenvector overlap " << overlap << " between t=" << trace.times[k]
            << " and t=" << trace.times[k + 1];
        trace.continuity_warnings.push_back(msg.str());
      }
    }
  }
  if (keep_vectors) trace.vectors = std::move(vectors);
  return trace;
}

GapTrace gap_trace(const SpectrumTrace& trace, int level) {
  if (level < 1) throw DomainError("gap_trace: level must be at least 1");
  if (trace.levels.empty() || static_cast<std::size_t>(level) >= trace.levels.front().size()) {
    throw DomainError("gap_trace: level " + std::to_string(level) + " not present in trace");
  }
  GapTrace out;
  out.level = level;
  out.times = trace.times;
  out.gaps.reserve(trace.times.size());
  for (const auto& lv : trace.levels) out.gaps.push_back(lv[static_cast<std::size_t>(level)] - lv[0]);
  const auto it = std::min_element(out.gaps.begin(), out.gaps.end());
  out.min_gap = *it;
  out.t_at_min = out.times[static_cast<std::size_t>(it - out.gaps.begin())];
  return out;
}

AdiabaticTrace adiabatic_trace(const AnnealSchedule& schedule, int n_points, int max_level, int jobs) {
  if (n_points < 2) throw DomainError("adiabatic_trace: n_points must be at least 2");
  const auto dim = static_cast<int>(schedule.dim());
  if (max_level < 1 || max_level >= dim) {
    throw DomainError("adiabatic_trace: max_level must lie in [1, " + std::to_string(dim - 1) + "]");
  }
  AdiabaticTrace out;
  out.times = uniform_times(schedule.T(), n_points);
  const auto count = out.times.size();
  for (int j = 1; j <= max_level; ++j) out.levels.push_back(j);
  out.numerators.assign(static_cast<std::size_t>(max_level), std::vector<double>(count, 0.0));
  out.metrics.assign(static_cast<std::size_t>(max_level), std::vector<std::optional<double>>(count));

  const Matrix dhdt = hamiltonian_time_derivative(schedule).matrix();
  parallel_for(count, jobs, [&](std::size_t k) {
    const Eigensystem es = eigendecompose(hamiltonian_at(schedule, out.times[k]));
    const StateVector applied = dhdt * es.vectors.col(0);
    for (int j = 1; j <= max_level; ++j) {
      const auto row = static_cast<std::size_t>(j - 1);
      const double numer = std::abs(es.vectors.col(j).dot(applied));
      const double gap = es.values(j) - es.values(0);
      out.numerators[row][k] = numer;
      if (gap >= 1e-10) out.metrics[row][k] = numer / (gap * gap);
    }
  });
  return out;
}

}  // namespace tqa
