#include "twistqa/lindblad.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <sstream>

#include "twistqa/error.hpp"
#include "twistqa/spectral.hpp"

namespace tqa {

DensityMatrix ground_state_density(const DenseOperator& op) {
  const Eigensystem es = eigendecompose(op);
  return DensityMatrix::pure(es.vectors.col(0));
}

Eigen::MatrixXd dephasing_weights(int n_qubits, double gamma) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Eigen::MatrixXd w(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      // s_n(a) s_n(b) - 1 is -2 where the bits differ and 0 elsewhere
      const int differing = std::popcount(static_cast<std::uint64_t>(a ^ b));
      w(a, b) = -2.0 * gamma * differing;
    }
  }
  return w;
}

Matrix lindblad_rhs(const DensityMatrix& rho, const DenseOperator& H, double gamma, int n_qubits) {
  if (rho.dim() != H.dim() || rho.dim() != (std::size_t{1} << n_qubits)) {
    throw DimensionError("lindblad_rhs: dimension mismatch");
  }
  if (gamma < 0.0) throw DomainError("lindblad_rhs: gamma must be nonnegative");
  const Matrix& r = rho.matrix();
  const Matrix& h = H.matrix();
  Matrix out = cplx{0.0, -1.0} * (h * r - r * h);
  out += dephasing_weights(n_qubits, gamma).cast<cplx>().cwiseProduct(r);
  return out;
}

namespace {

std::vector<int> sample_steps(int steps, int sample_count) {
  std::vector<int> out;
  if (sample_count <= 0) return out;
  if (sample_count == 1) return {steps};
  out.reserve(static_cast<std::size_t>(sample_count));
  for (int i = 0; i < sample_count; ++i) {
    out.push_back(static_cast<int>(std::lround(static_cast<double>(i) * steps / (sample_count - 1))));
  }
  return out;
}

// A complex matrix held as separate real and imaginary parts, so every
// kernel product is a real GEMM.
template <int Dim>
struct Split {
  using Real = Eigen::Matrix<double, Dim, Dim>;
  Real re, im;

  explicit Split(Eigen::Index dim) : re(dim, dim), im(dim, dim) {}
  void assign(const Matrix& m) {
    re = m.real();
    im = m.imag();
  }
  Matrix complex() const {
    Matrix m(re.rows(), re.cols());
    m.real() = re;
    m.imag() = im;
    return m;
  }
};

// Work buffers for one integration, sized at compile time when possible.
template <int Dim>
struct Rk4Workspace {
  using Real = typename Split<Dim>::Real;
  Split<Dim> driver, problem, h, rho, tmp, acc, stage;
  Real weights, k_re, k_im;
  bool real_hamiltonian = false;

  explicit Rk4Workspace(Eigen::Index dim)
      : driver(dim), problem(dim), h(dim), rho(dim), tmp(dim), acc(dim), stage(dim), weights(dim, dim),
        k_re(dim, dim), k_im(dim, dim) {}

  void set_hamiltonian(double s) {
    h.re = (1.0 - s) * driver.re + s * problem.re;
    if (!real_hamiltonian) h.im = (1.0 - s) * driver.im + s * problem.im;
  }

  // out = -i[h, x] + W ∘ x for Hermitian x. With k = h x, x h = k^dagger, so
  // -i(k - k^dagger) = (k_im + k_im^T) - i (k_re - k_re^T).
  void rhs(const Split<Dim>& x, Split<Dim>& out) {
    k_re.noalias() = h.re * x.re;
    k_im.noalias() = h.re * x.im;
    if (!real_hamiltonian) {
      k_re.noalias() -= h.im * x.im;
      k_im.noalias() += h.im * x.re;
    }
    out.re = k_im + k_im.transpose() + weights.cwiseProduct(x.re);
    out.im = k_re.transpose() - k_re + weights.cwiseProduct(x.im);
  }

  // tmp = rho + c * stage
  void offset(double c) {
    tmp.re = rho.re + c * stage.re;
    tmp.im = rho.im + c * stage.im;
  }
  void accumulate(double c) {
    acc.re += c * stage.re;
    acc.im += c * stage.im;
  }
};

template <int Dim>
EvolutionResult run_rk4(const DensityMatrix& initial, const AnnealSchedule& schedule, const AnnealConfig& config,
                        int sample_count) {
  const auto dim = static_cast<Eigen::Index>(schedule.dim());
  auto ws = std::make_unique<Rk4Workspace<Dim>>(dim);
  ws->driver.assign(schedule.driver().matrix());
  ws->problem.assign(schedule.problem().matrix());
  ws->real_hamiltonian = ws->driver.im.isZero(0.0) && ws->problem.im.isZero(0.0);
  ws->weights = dephasing_weights(std::countr_zero(schedule.dim()), config.gamma);
  ws->rho.assign(initial.matrix());

  const int steps = config.effective_steps();
  const double T = schedule.T();
  const double dt = T / steps;
  const std::vector<int> samples_at = sample_steps(steps, sample_count);
  std::size_t next_sample = 0;

  EvolutionResult result;
  result.diagnostics.steps = steps;
  auto record = [&](int step) {
    const Matrix rho = ws->rho.complex();
    const double trace_drift = std::abs(rho.trace() - cplx{1.0, 0.0});
    const double herm_drift = hermiticity_defect(rho);
    result.diagnostics.max_trace_drift = std::max(result.diagnostics.max_trace_drift, trace_drift);
    result.diagnostics.max_hermiticity_drift = std::max(result.diagnostics.max_hermiticity_drift, herm_drift);
    const double t = step == steps ? T : dt * step;
    result.samples.push_back({t, DensityMatrix::unchecked(rho)});
  };
  while (next_sample < samples_at.size() && samples_at[next_sample] == 0) {
    record(0);
    ++next_sample;
  }

  const double inv_steps = 1.0 / steps;
  for (int step = 0; step < steps; ++step) {
    const double s0 = step * inv_steps;
    const double s_mid = (step + 0.5) * inv_steps;
    const double s1 = step + 1 == steps ? 1.0 : (step + 1) * inv_steps;

    ws->set_hamiltonian(s0);
    ws->rhs(ws->rho, ws->stage);
    ws->acc = ws->stage;
    ws->offset(0.5 * dt);
    ws->set_hamiltonian(s_mid);
    ws->rhs(ws->tmp, ws->stage);
    ws->accumulate(2.0);
    ws->offset(0.5 * dt);
    ws->rhs(ws->tmp, ws->stage);
    ws->accumulate(2.0);
    ws->offset(dt);
    ws->set_hamiltonian(s1);
    ws->rhs(ws->tmp, ws->stage);
    ws->accumulate(1.0);
    ws->rho.re += (dt / 6.0) * ws->acc.re;
    ws->rho.im += (dt / 6.0) * ws->acc.im;

    const cplx tr{ws->rho.re.trace(), ws->rho.im.trace()};
    if (!std::isfinite(tr.real()) || !std::isfinite(tr.imag()) || std::abs(tr - cplx{1.0, 0.0}) > kTraceAbortThreshold) {
      std::ostringstream msg;
      msg << "evolve: trace drift " << std::abs(tr - cplx{1.0, 0.0}) << " at t=" << dt * (step + 1) << " (dt=" << dt
          << ", " << steps << " steps); increase the step count";
      throw NumericalError(msg.str());
    }
    while (next_sample < samples_at.size() && samples_at[next_sample] == step + 1) {
      record(step + 1);
      ++next_sample;
    }
  }

  Matrix rho = ws->rho.complex();
  if (!rho.allFinite()) throw NumericalError("evolve: final state is not finite");
  const double trace_drift = std::abs(rho.trace() - cplx{1.0, 0.0});
  const double herm_drift = hermiticity_defect(rho);
  result.diagnostics.max_trace_drift = std::max(result.diagnostics.max_trace_drift, trace_drift);
  result.diagnostics.max_hermiticity_drift = std::max(result.diagnostics.max_hermiticity_drift, herm_drift);
  if (trace_drift > kRenormalizeThreshold || herm_drift > kRenormalizeThreshold) {
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    result.diagnostics.renormalized = true;
  }
  result.final_state = DensityMatrix::unchecked(std::move(rho));
  return result;
}

}  // namespace

EvolutionResult evolve(const DensityMatrix& initial, const AnnealSchedule& schedule, const AnnealConfig& config,
                       int sample_count) {
  config.validate();
  if (initial.dim() != schedule.dim()) throw DimensionError("evolve: initial state and schedule differ in dimension");
  if (schedule.T() != config.T) throw DomainError("evolve: schedule T and config T differ");
  if (config.lindblad_axis != LindbladAxis::Z) throw DomainError("evolve: only Z dephasing is supported");
  initial.validate();

  switch (schedule.dim()) {
    case 2: return run_rk4<2>(initial, schedule, config, sample_count);
    case 4: return run_rk4<4>(initial, schedule, config, sample_count);
    case 8: return run_rk4<8>(initial, schedule, config, sample_count);
    case 16: return run_rk4<16>(initial, schedule, config, sample_count);
    case 32: return run_rk4<32>(initial, schedule, config, sample_count);
    default: return run_rk4<Eigen::Dynamic>(initial, schedule, config, sample_count);
  }
}

}  // namespace tqa
