#include "twistqa/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "twistqa/error.hpp"

namespace tqa {

TwistAngles::TwistAngles(std::vector<double> thetas) : thetas_(std::move(thetas)) {
  for (double t : thetas_) {
    if (!std::isfinite(t)) throw DomainError("twist angles must be finite");
  }
}

void AnnealConfig::validate() const {
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("annealing time T must be positive, got " + std::to_string(T));
  if (n_time_steps < 2) throw DomainError("n_time_steps must be at least 2");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be nonnegative");
  if (!std::isfinite(max_dt)) throw DomainError("max_dt must be finite");
}

int AnnealConfig::effective_steps() const {
  if (max_dt <= 0.0) return n_time_steps;
  const double needed = std::ceil(T / max_dt);
  if (needed > 1e9) throw DomainError("T / max_dt requires more than 1e9 steps");
  return std::max(n_time_steps, static_cast<int>(needed));
}

AnnealSchedule::AnnealSchedule(DenseOperator driver, DenseOperator problem, double T)
    : driver_(std::move(driver)), problem_(std::move(problem)), T_(T) {
  if (driver_.dim() != problem_.dim()) {
    throw DimensionError("schedule driver and problem differ in dimension: " + std::to_string(driver_.dim()) + " vs " +
                         std::to_string(problem_.dim()));
  }
  if (!(T_ > 0.0)) throw DomainError("schedule needs T > 0");
}

PauliSum transverse_field_driver(int n_qubits) {
  if (n_qubits < 1) throw DomainError("transverse_field_driver: need at least one qubit");
  PauliSum s(n_qubits);
  for (int i = 0; i < n_qubits; ++i) {
    std::string axes(static_cast<std::size_t>(n_qubits), 'I');
    axes[static_cast<std::size_t>(i)] = 'X';
    s.add(-1.0, axes);
  }
  return canonicalize(s);
}

PauliSum hydrogen_hamiltonian() {
  PauliSum s(4);
  s.add(-0.09706626816762881, "IIII");
  s.add(0.17141282644776895, "ZIII");
  s.add(0.17141282644776892, "IZII");
  s.add(-0.22343153690813586, "IIZI");
  s.add(-0.22343153690813589, "IIIZ");
  s.add(0.16868898170361213, "ZZII");
  s.add(0.12062523483390428, "ZIZI");
  s.add(0.16592785033770355, "IZZI");
  s.add(0.16592785033770355, "ZIIZ");
  s.add(0.12062523483390428, "IZIZ");
  s.add(0.17441287612261597, "IIZZ");
  s.add(-0.04530261550379928, "YYXX");
  s.add(0.04530261550379928, "XYYX");
  s.add(0.04530261550379928, "YXXY");
  s.add(-0.04530261550379928, "XXYY");
  return canonicalize(s);
}

PauliSum deformed_spin_star(int n_peripheral, double omega, double omega1, double J) {
  if (n_peripheral < 1) throw DomainError("deformed_spin_star: need at least one peripheral spin");
  const int n = n_peripheral + 1;
  constexpr cplx i{0.0, 1.0};
  auto raise = [&](int site) { return single_site(n, site, 'X', 0.5) + single_site(n, site, 'Y', 0.5 * i); };
  auto lower = [&](int site) { return single_site(n, site, 'X', 0.5) + single_site(n, site, 'Y', -0.5 * i); };

  PauliSum j_plus(n, {}, false);
  PauliSum j_minus(n, {}, false);
  PauliSum jz(n);
  for (int j = 1; j <= n_peripheral; ++j) {
    const cplx phase = std::exp(2.0 * std::numbers::pi * i * static_cast<double>(j) / static_cast<double>(n_peripheral));
    j_plus = j_plus + phase * raise(j);
    j_minus = j_minus + std::conj(phase) * lower(j);
    jz = jz + single_site(n, j, 'Z');
  }
  const PauliSum exchange = raise(0) * j_minus + lower(0) * j_plus;
  const PauliSum h = single_site(n, 0, 'Z', omega) + omega1 * jz + cplx{J, 0.0} * exchange;
  return canonicalize(h).with_hermitian(true);
}

StateVector phased_w_state(int n_peripheral, double phase) {
  if (n_peripheral < 1) throw DomainError("phased_w_state: need at least one site");
  const Eigen::Index dim = Eigen::Index{1} << n_peripheral;
  const Eigen::Index all_down = dim - 1;
  StateVector psi = StateVector::Zero(dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n_peripheral));
  for (int j = 1; j <= n_peripheral; ++j) {
    // site j sits at bit position (n_peripheral - j); raising flips it to 0
    const Eigen::Index flipped = all_down ^ (Eigen::Index{1} << (n_peripheral - j));
    psi(flipped) = norm * std::exp(cplx{0.0, phase * static_cast<double>(j)});
  }
  return psi;
}

DenseOperator twist_operator(const TwistAngles& angles) {
  if (angles.size() == 0) throw DomainError("twist_operator: empty angle vector");
  Matrix u = Matrix::Identity(1, 1);
  for (double theta : angles.values()) {
    // exp(i θ Y) = cos θ I + i sin θ Y
    Matrix r(2, 2);
    r << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    u = kron(u, r);
  }
  return DenseOperator(std::move(u));
}

DenseOperator twisted_driver(const PauliSum& driver, const TwistAngles& angles) {
  if (angles.size() != static_cast<std::size_t>(driver.n_qubits())) {
    throw DimensionError("twisted_driver: " + std::to_string(angles.size()) + " angles for " +
                         std::to_string(driver.n_qubits()) + " qubits");
  }
  const DenseOperator u = twist_operator(angles);
  return u.adjoint() * to_dense(driver) * u;
}

PauliSum twisted_transverse_field(const TwistAngles& angles) {
  const int n = static_cast<int>(angles.size());
  if (n < 1) throw DomainError("twisted_transverse_field: empty angle vector");
  PauliSum s(n);
  for (int j = 0; j < n; ++j) {
    const double two_theta = 2.0 * angles[static_cast<std::size_t>(j)];
    s = s + single_site(n, j, 'X', -std::cos(two_theta)) + single_site(n, j, 'Z', std::sin(two_theta));
  }
  return s;
}

DenseOperator hamiltonian_at(const AnnealSchedule& schedule, double t) {
  if (!(t >= 0.0 && t <= schedule.T())) {
    throw DomainError("hamiltonian_at: t = " + std::to_string(t) + " outside [0, " + std::to_string(schedule.T()) + "]");
  }
  const double s = t / schedule.T();
  return DenseOperator((1.0 - s) * schedule.driver().matrix() + s * schedule.problem().matrix());
}

DenseOperator hamiltonian_time_derivative(const AnnealSchedule& schedule) {
  return DenseOperator((schedule.problem().matrix() - schedule.driver().matrix()) / schedule.T());
}

}  // namespace tqa
