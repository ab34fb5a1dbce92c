#pragma once

#include <cstdint>
#include <random>

#include "jacobi.hpp"
#include "twistqa/dense.hpp"
#include "twistqa/density_matrix.hpp"

namespace testing_support {

// Frozen from the Jacobi reference solver (tests/oracle) on the H2 table.
inline constexpr double kHydrogenGroundEnergy = -1.1372838344885021;
// Same solver, min over s = k/200 of E1 - E0 for the untwisted H2 schedule.
inline constexpr double kHydrogenMinGapUntwisted = 0.40445976739912382;

inline tqa::Matrix to_eigen(const oracle::CMatrix& m) {
  tqa::Matrix out(m.n, m.n);
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c) out(r, c) = m(r, c);
  return out;
}

inline tqa::Matrix random_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  tqa::Matrix a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a(r, c) = {g(rng), g(rng)};
  return 0.5 * (a + a.adjoint());
}

inline tqa::DensityMatrix random_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  tqa::Matrix a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a(r, c) = {g(rng), g(rng)};
  tqa::Matrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return tqa::DensityMatrix::from_matrix(rho);
}

}  // namespace testing_support
