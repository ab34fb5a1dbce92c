#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "twistqa/dense.hpp"
#include "twistqa/pauli.hpp"

namespace tqa {

/// Per-qubit twist angles in radians. Any finite value is allowed; only
/// cos 2θ and sin 2θ reach the Hamiltonian.
class TwistAngles {
 public:
  TwistAngles() = default;
  explicit TwistAngles(std::vector<double> thetas);
  TwistAngles(std::initializer_list<double> thetas) : TwistAngles(std::vector<double>(thetas)) {}

  static TwistAngles zeros(std::size_t n) { return TwistAngles(std::vector<double>(n, 0.0)); }

  std::size_t size() const noexcept { return thetas_.size(); }
  double operator[](std::size_t j) const { return thetas_[j]; }
  std::span<const double> values() const noexcept { return thetas_; }
  const std::vector<double>& vector() const noexcept { return thetas_; }

  friend bool operator==(const TwistAngles&, const TwistAngles&) = default;

 private:
  std::vector<double> thetas_;
};

enum class LindbladAxis : std::uint8_t { Z };

/// Annealing time T, integrator grid and dephasing strength.
///
/// The integrator takes max(n_time_steps, ceil(T / max_dt)) uniform steps;
/// max_dt <= 0 disables the resolution floor.
struct AnnealConfig {
  double T = 1.0;
  int n_time_steps = 2000;
  double gamma = 0.0;
  LindbladAxis lindblad_axis = LindbladAxis::Z;
  double max_dt = 0.0;

  // Throws DomainError unless T > 0, n_time_steps >= 2, gamma >= 0.
  void validate() const;
  int effective_steps() const;
};

/// H(t) = (1 - t/T) driver + (t/T) problem on [0, T].
class AnnealSchedule {
 public:
  AnnealSchedule(DenseOperator driver, DenseOperator problem, double T);

  const DenseOperator& driver() const noexcept { return driver_; }
  const DenseOperator& problem() const noexcept { return problem_; }
  double T() const noexcept { return T_; }
  std::size_t dim() const noexcept { return driver_.dim(); }

 private:
  DenseOperator driver_;
  DenseOperator problem_;
  double T_;
};

// -sum_i X_i. Ground state |+>^n with energy -n.
PauliSum transverse_field_driver(int n_qubits);

// Four-qubit H2 Hamiltonian (STO-3G, Jordan-Wigner, 0.74 Å), 15 terms in GHz.
PauliSum hydrogen_hamiltonian();

/// omega Z_0 + omega1 Jz + J (s0+ J- + s0- J+) on qubit 0 (centre) and
/// qubits 1..N, with J+ = sum_j exp(2 pi i j / N) s_j+ and s+ = (X + iY)/2.
PauliSum deformed_spin_star(int n_peripheral, double omega, double omega1, double J);

// (1/sqrt(N)) sum_j exp(i j phase) s_j+ |down...down> on the N peripheral
// qubits; |down> is the computational |1>.
StateVector phased_w_state(int n_peripheral, double phase);

// prod_j exp(i theta_j Y_j) as a tensor product of 2x2 rotations.
DenseOperator twist_operator(const TwistAngles& angles);

// U^dagger driver U with U = twist_operator(angles).
DenseOperator twisted_driver(const PauliSum& driver, const TwistAngles& angles);

// Closed form of the twisted transverse field:
// -sum_j (cos 2θ_j X_j - sin 2θ_j Z_j).
PauliSum twisted_transverse_field(const TwistAngles& angles);

// Throws DomainError for t outside [0, T].
DenseOperator hamiltonian_at(const AnnealSchedule& schedule, double t);

// dH/dt = (problem - driver) / T.
DenseOperator hamiltonian_time_derivative(const AnnealSchedule& schedule);

}  // namespace tqa
