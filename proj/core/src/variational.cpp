#include "twistqa/variational.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <tuple>

#include "twistqa/diagnostics.hpp"
#include "twistqa/error.hpp"
#include "twistqa/parallel.hpp"
#include "twistqa/spectral.hpp"

namespace tqa {

AnnealProblem::AnnealProblem(PauliSum problem)
    : pauli_(std::move(problem)), dense_(to_dense(pauli_)), driver_(transverse_field_driver(pauli_.n_qubits())) {
  const Eigensystem es = eigendecompose(dense_);
  ground_energy_ = es.values(0);
  ground_state_ = es.vectors.col(0);
}

AnnealOutcome run_anneal(const AnnealProblem& problem, const TwistAngles& thetas, const AnnealConfig& config,
                         int sample_count) {
  const DenseOperator driver = twisted_driver(problem.driver(), thetas);
  const Eigensystem driver_es = eigendecompose(driver);
  const DensityMatrix initial = DensityMatrix::pure(driver_es.vectors.col(0));
  const AnnealSchedule schedule(driver, problem.dense(), config.T);

  AnnealOutcome out;
  out.evolution = evolve(initial, schedule, config, sample_count);
  out.energy = expectation(problem.dense(), out.evolution.final_state);
  out.error = estimation_error(out.energy, problem.ground_energy());
  out.purity = purity(out.evolution.final_state);
  out.overlap = overlap(driver_es.vectors.col(0), problem.ground_state());
  return out;
}

double estimate_energy(const AnnealProblem& problem, const TwistAngles& thetas, const AnnealConfig& config) {
  return run_anneal(problem, thetas, config).energy;
}

double estimate_energy(const TwistAngles& thetas, const PauliSum& problem, const AnnealConfig& config) {
  return estimate_energy(AnnealProblem(problem), thetas, config);
}

std::vector<double> numerical_gradient(const EnergyFunction& energy, const TwistAngles& thetas, double fd_step,
                                       int jobs) {
  if (!(fd_step > 0.0)) throw DomainError("numerical_gradient: fd_step must be positive");
  const std::size_t n = thetas.size();
  std::vector<double> probes(2 * n);
  parallel_for(2 * n, jobs, [&](std::size_t k) {
    std::vector<double> shifted = thetas.vector();
    shifted[k / 2] += (k % 2 == 0) ? fd_step : -fd_step;
    probes[k] = energy(TwistAngles(std::move(shifted)));
  });
  std::vector<double> grad(n);
  for (std::size_t j = 0; j < n; ++j) grad[j] = (probes[2 * j] - probes[2 * j + 1]) / (2.0 * fd_step);
  return grad;
}

std::vector<double> numerical_gradient(const AnnealProblem& problem, const TwistAngles& thetas,
                                       const AnnealConfig& config, double fd_step, int jobs) {
  return numerical_gradient([&](const TwistAngles& t) { return estimate_energy(problem, t, config); }, thetas, fd_step,
                            jobs);
}

TwistAngles initial_angles(std::size_t n, std::uint64_t seed, double spread) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-spread, spread);
  std::vector<double> thetas(n);
  for (auto& t : thetas) t = dist(rng);
  return TwistAngles(std::move(thetas));
}

namespace {
double checked_energy(const EnergyFunction& energy, const TwistAngles& thetas, int step) {
  const double e = energy(thetas);
  if (!std::isfinite(e)) {
    std::ostringstream msg;
    msg << "gradient_descent: non-finite energy at step " << step;
    throw NumericalError(msg.str());
  }
  return e;
}
}  // namespace

VariationalState gradient_descent(VariationalState state, const EnergyFunction& energy, double reference_energy,
                                  int jobs) {
  if (state.n_steps < 0) throw DomainError("gradient_descent: n_steps must be nonnegative");
  if (state.alpha < 0.0) throw DomainError("gradient_descent: alpha must be nonnegative");
  state.history.clear();
  state.stopped_early = false;

  double e = checked_energy(energy, state.thetas, 0);
  state.history.push_back({0, state.thetas, e, estimation_error(e, reference_energy)});
  int flat_steps = 0;
  for (int step = 1; step <= state.n_steps; ++step) {
    const std::vector<double> grad = numerical_gradient(energy, state.thetas, state.fd_step, jobs);
    std::vector<double> next = state.thetas.vector();
    for (std::size_t j = 0; j < next.size(); ++j) {
      if (!std::isfinite(grad[j])) throw NumericalError("gradient_descent: non-finite gradient");
      next[j] -= state.alpha * grad[j];
    }
    state.thetas = TwistAngles(std::move(next));
    const double e_next = checked_energy(energy, state.thetas, step);
    state.history.push_back({step, state.thetas, e_next, estimation_error(e_next, reference_energy)});

    flat_steps = std::abs(e_next - e) < kPlateauTolerance ? flat_steps + 1 : 0;
    e = e_next;
    if (flat_steps >= kPlateauSteps) {
      state.stopped_early = true;
      break;
    }
  }
  return state;
}

VariationalState gradient_descent(VariationalState state, const AnnealProblem& problem, const AnnealConfig& config,
                                  int jobs) {
  return gradient_descent(
      std::move(state), [&](const TwistAngles& t) { return estimate_energy(problem, t, config); },
      problem.ground_energy(), jobs);
}

TimeScanPoint run_variational(const AnnealProblem& problem, const AnnealConfig& config,
                              const VariationalSettings& settings) {
  const auto n = static_cast<std::size_t>(problem.n_qubits());
  TimeScanPoint point;
  point.T = config.T;
  point.conventional = run_anneal(problem, TwistAngles::zeros(n), config);

  VariationalState start;
  start.thetas = initial_angles(n, settings.seed);
  start.alpha = settings.alpha;
  start.n_steps = settings.n_steps;
  start.fd_step = settings.fd_step;
  point.descent = gradient_descent(std::move(start), problem, config, settings.jobs);
  point.twisted = run_anneal(problem, point.descent.thetas, config);
  return point;
}

TimeScanResult anneal_time_scan(const std::vector<double>& T_values, const AnnealProblem& problem,
                                const AnnealConfig& base, const VariationalSettings& settings,
                                const std::function<void(const TimeScanPoint&)>& on_point) {
  if (T_values.empty()) throw DomainError("anneal_time_scan: no annealing times given");
  for (double T : T_values) {
    if (!(T > 0.0)) throw DomainError("anneal_time_scan: annealing times must be positive");
  }
  TimeScanResult result;
  for (double T : T_values) {
    AnnealConfig config = base;
    config.T = T;
    result.points.push_back(run_variational(problem, config, settings));
    if (on_point) on_point(result.points.back());
  }

  auto argmin = [&](auto error_of) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < result.points.size(); ++k) {
      const auto& p = result.points[k];
      const auto& b = result.points[best];
      if (std::tuple(error_of(p), p.T) < std::tuple(error_of(b), b.T)) best = k;
    }
    return best;
  };
  result.twisted_opt = argmin([](const TimeScanPoint& p) { return p.twisted.error; });
  result.conventional_opt = argmin([](const TimeScanPoint& p) { return p.conventional.error; });
  return result;
}

}  // namespace tqa
