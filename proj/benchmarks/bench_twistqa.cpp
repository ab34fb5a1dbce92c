#include <benchmark/benchmark.h>

#include "twistqa/dense.hpp"
#include "twistqa/lindblad.hpp"
#include "twistqa/models.hpp"
#include "twistqa/pauli.hpp"
#include "twistqa/spectral.hpp"
#include "twistqa/variational.hpp"

namespace {

tqa::AnnealConfig config(double T, int steps) {
  tqa::AnnealConfig c;
  c.T = T;
  c.n_time_steps = steps;
  c.gamma = 1e-4;
  return c;
}

tqa::PauliSum model(int which) {
  return which == 0 ? tqa::hydrogen_hamiltonian() : tqa::deformed_spin_star(4, 1.0, 1.0, 15.0);
}

// Per-step cost of the RK4 integrator; 0 = hydrogen (d = 16), 1 = spin star (d = 32).
void BM_Evolve(benchmark::State& state) {
  const auto problem = model(static_cast<int>(state.range(0)));
  const auto driver = tqa::to_dense(tqa::transverse_field_driver(problem.n_qubits()));
  const auto cfg = config(10.0, 1000);
  const tqa::AnnealSchedule schedule(driver, tqa::to_dense(problem), cfg.T);
  const auto rho0 = tqa::ground_state_density(driver);
  for (auto _ : state) benchmark::DoNotOptimize(tqa::evolve(rho0, schedule, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.n_time_steps);
}
BENCHMARK(BM_Evolve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Eigendecompose(benchmark::State& state) {
  const auto h = tqa::to_dense(model(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(tqa::eigendecompose(h));
}
BENCHMARK(BM_Eigendecompose)->Arg(0)->Arg(1);

void BM_ToDense(benchmark::State& state) {
  const auto p = model(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tqa::to_dense(p));
}
BENCHMARK(BM_ToDense)->Arg(0)->Arg(1);

void BM_TwistedDriver(benchmark::State& state) {
  const auto driver = tqa::transverse_field_driver(5);
  const tqa::TwistAngles thetas{0.1, -0.2, 0.3, 0.05, -0.4};
  for (auto _ : state) benchmark::DoNotOptimize(tqa::twisted_driver(driver, thetas));
}
BENCHMARK(BM_TwistedDriver);

void BM_GradientHydrogen(benchmark::State& state) {
  const tqa::AnnealProblem problem(tqa::hydrogen_hamiltonian());
  const auto cfg = config(5.0, 50);
  const auto thetas = tqa::initial_angles(4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(tqa::numerical_gradient(problem, thetas, cfg, 1e-3));
}
BENCHMARK(BM_GradientHydrogen)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
