#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "twistqa/density_matrix.hpp"
#include "twistqa/lindblad.hpp"
#include "twistqa/models.hpp"
#include "twistqa/pauli.hpp"

namespace tqa {

/// Problem Hamiltonian plus everything derived from it once: its dense
/// matrix, exact ground state and energy, and the untwisted driver.
class AnnealProblem {
 public:
  // Throws DomainError if the dense problem Hamiltonian is not Hermitian.
  explicit AnnealProblem(PauliSum problem);

  int n_qubits() const noexcept { return pauli_.n_qubits(); }
  const PauliSum& pauli() const noexcept { return pauli_; }
  const DenseOperator& dense() const noexcept { return dense_; }
  const PauliSum& driver() const noexcept { return driver_; }
  double ground_energy() const noexcept { return ground_energy_; }
  const StateVector& ground_state() const noexcept { return ground_state_; }

 private:
  PauliSum pauli_;
  DenseOperator dense_;
  PauliSum driver_;
  double ground_energy_ = 0.0;
  StateVector ground_state_;
};

// Result of one anneal with a given twist.
struct AnnealOutcome {
  double energy = 0.0;
  double error = 0.0;    // |energy - E0|
  double purity = 1.0;   // of the final state
  double overlap = 0.0;  // |<driver ground|problem ground>|
  EvolutionResult evolution;
};

// Twisted driver -> its ground state -> Lindblad evolution -> <H_P>.
AnnealOutcome run_anneal(const AnnealProblem& problem, const TwistAngles& thetas, const AnnealConfig& config,
                         int sample_count = 0);

double estimate_energy(const AnnealProblem& problem, const TwistAngles& thetas, const AnnealConfig& config);
double estimate_energy(const TwistAngles& thetas, const PauliSum& problem, const AnnealConfig& config);

using EnergyFunction = std::function<double(const TwistAngles&)>;

// Central differences g_j = [E(θ + ε e_j) - E(θ - ε e_j)] / 2ε. The 2L
// probes run on up to `jobs` threads and are reduced in index order.
std::vector<double> numerical_gradient(const EnergyFunction& energy, const TwistAngles& thetas, double fd_step,
                                       int jobs = 1);
std::vector<double> numerical_gradient(const AnnealProblem& problem, const TwistAngles& thetas,
                                       const AnnealConfig& config, double fd_step, int jobs = 1);

// Consecutive |ΔE| below this for kPlateauSteps steps ends descent early.
inline constexpr double kPlateauTolerance = 1e-12;
inline constexpr int kPlateauSteps = 10;

struct HistoryEntry {
  int step = 0;
  TwistAngles thetas;
  double energy = 0.0;
  double error = 0.0;
};

struct VariationalState {
  TwistAngles thetas;
  double alpha = 0.05;
  int n_steps = 200;
  double fd_step = 1e-3;
  std::vector<HistoryEntry> history;
  bool stopped_early = false;
};

// θ_j drawn i.i.d. from U[-spread, spread] with a seeded 64-bit Mersenne twister.
TwistAngles initial_angles(std::size_t n, std::uint64_t seed, double spread = 0.05);

/// Plain gradient descent θ <- θ - α g for `n_steps` updates.
///
/// history[0] is the starting point; each update appends one entry. Errors
/// are measured against `reference_energy`. Throws NumericalError on a
/// non-finite energy or gradient.
VariationalState gradient_descent(VariationalState state, const EnergyFunction& energy, double reference_energy,
                                  int jobs = 1);
VariationalState gradient_descent(VariationalState state, const AnnealProblem& problem, const AnnealConfig& config,
                                  int jobs = 1);

struct VariationalSettings {
  double alpha = 0.05;
  int n_steps = 200;
  double fd_step = 1e-3;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct TimeScanPoint {
  double T = 0.0;
  AnnealOutcome conventional;  // θ = 0, no optimization
  AnnealOutcome twisted;       // at the final descent angles
  VariationalState descent;
};

struct TimeScanResult {
  std::vector<TimeScanPoint> points;
  std::size_t twisted_opt = 0;       // argmin twisted error, ties to smaller T
  std::size_t conventional_opt = 0;  // argmin conventional error, ties to smaller T
  double T_opt() const { return points.at(twisted_opt).T; }
};

// Full variational pipeline plus the conventional baseline at every T. Each
// point starts descent from initial_angles(n, settings.seed).
TimeScanResult anneal_time_scan(const std::vector<double>& T_values, const AnnealProblem& problem,
                                const AnnealConfig& base, const VariationalSettings& settings,
                                const std::function<void(const TimeScanPoint&)>& on_point = {});

// Runs the baseline and the descent at config.T.
TimeScanPoint run_variational(const AnnealProblem& problem, const AnnealConfig& config,
                              const VariationalSettings& settings);

}  // namespace tqa
