#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "reference_models.hpp"
#include "twistqa/error.hpp"
#include "twistqa/models.hpp"
#include "twistqa/pauli.hpp"
#include "twistqa/spectral.hpp"

namespace {

using tqa::cplx;
using tqa::DenseOperator;
using tqa::Matrix;

tqa::AnnealSchedule hydrogen_schedule(double T, const tqa::TwistAngles& thetas = tqa::TwistAngles::zeros(4)) {
  return {tqa::twisted_driver(tqa::transverse_field_driver(4), thetas), tqa::to_dense(tqa::hydrogen_hamiltonian()),
          T};
}

TEST(Eigendecompose, PauliZ) {
  const auto es = tqa::eigendecompose(tqa::to_dense(tqa::PauliSum(1, {{1.0, "Z"}})));
  EXPECT_DOUBLE_EQ(es.values(0), -1.0);
  EXPECT_DOUBLE_EQ(es.values(1), 1.0);
  EXPECT_EQ(es.vectors(1, 0), cplx(1.0));  // |1>
  EXPECT_EQ(es.vectors(0, 1), cplx(1.0));  // |0>
}

TEST(Eigendecompose, TwoQubitTransverseField) {
  EXPECT_NEAR(tqa::eigendecompose(tqa::to_dense(tqa::transverse_field_driver(2))).values(0), -2.0, 1e-14);
}

TEST(Eigendecompose, HydrogenMatchesGolden) {
  EXPECT_NEAR(tqa::eigendecompose(tqa::to_dense(tqa::hydrogen_hamiltonian())).values(0),
              testing_support::kHydrogenGroundEnergy, 1e-10);
}

TEST(Eigendecompose, RejectsNonHermitian) {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = 1e-6;
  EXPECT_THROW(tqa::eigendecompose(DenseOperator(m)), tqa::DomainError);
}

TEST(Eigendecompose, DegenerateTieBreakAndPhase) {
  // Identity: every ordering is valid; convention picks basis order with +1 entries.
  const auto es = tqa::eigendecompose(DenseOperator::identity(4));
  EXPECT_EQ(es.vectors, Matrix::Identity(4, 4));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = testing_support::random_hermitian(8, rng);
    const auto e = tqa::eigendecompose(DenseOperator(h));
    for (Eigen::Index k = 0; k < 8; ++k) {
      Eigen::Index arg = 0;
      e.vectors.col(k).cwiseAbs().maxCoeff(&arg);
      EXPECT_GT(e.vectors(arg, k).real(), 0.0);
      EXPECT_EQ(e.vectors(arg, k).imag(), 0.0);
    }
  }
}

TEST(Eigendecompose, AgreesWithReferenceOnRandomMatrices) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = testing_support::random_hermitian(16, rng);
    oracle::CMatrix ref(16);
    for (int r = 0; r < 16; ++r)
      for (int c = 0; c < 16; ++c) ref(r, c) = h(r, c);
    const auto expected = oracle::jacobi_eigen(ref);
    const auto es = tqa::eigendecompose(DenseOperator(h));
    for (int k = 0; k < 16; ++k) EXPECT_NEAR(es.values(k), expected.values[static_cast<std::size_t>(k)], 1e-10);
    EXPECT_LT(tqa::max_abs_diff(h * es.vectors, es.vectors * es.values.cast<cplx>().asDiagonal()), 1e-10);
  }
}

TEST(SpectrumTrace, EndpointsAndDeterminism) {
  const auto sched = hydrogen_schedule(3.0);
  const auto a = tqa::spectrum_trace(sched, 11, 0);
  const auto b = tqa::spectrum_trace(sched, 11, 0, false, 3);
  EXPECT_EQ(a.levels, b.levels);
  EXPECT_EQ(a.times.back(), 3.0);
  const auto driver = tqa::eigendecompose(sched.driver()).values;
  const auto problem = tqa::eigendecompose(sched.problem()).values;
  for (int k = 0; k < 16; ++k) {
    EXPECT_EQ(a.levels.front()[static_cast<std::size_t>(k)], driver(k));
    EXPECT_EQ(a.levels.back()[static_cast<std::size_t>(k)], problem(k));
  }
  EXPECT_THROW(tqa::spectrum_trace(sched, 1, 0), tqa::DomainError);
}

TEST(SpectrumTrace, KeepsLowestLevels) {
  const auto t = tqa::spectrum_trace(hydrogen_schedule(1.0), 5, 3, true);
  ASSERT_EQ(t.levels.front().size(), 3u);
  ASSERT_EQ(t.vectors.size(), 5u);
  EXPECT_EQ(t.vectors.front().cols(), 3);
}

TEST(SpectrumTrace, TwistLeavesInitialSpectrum) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const auto plain = tqa::spectrum_trace(hydrogen_schedule(1.0), 2, 0);
  const auto twisted = tqa::spectrum_trace(hydrogen_schedule(1.0, {u(rng), u(rng), u(rng), u(rng)}), 2, 0);
  for (std::size_t k = 0; k < 16; ++k) EXPECT_NEAR(twisted.levels[0][k], plain.levels[0][k], 1e-10);
}

TEST(GapTrace, HydrogenMinimumGapMatchesGolden) {
  const auto g = tqa::gap_trace(tqa::spectrum_trace(hydrogen_schedule(1.0), 201, 2), 1);
  EXPECT_NEAR(g.min_gap, testing_support::kHydrogenMinGapUntwisted, 1e-10);
  EXPECT_NEAR(g.t_at_min, 0.85, 1e-12);
  const auto ref = oracle::jacobi_eigen(oracle::hydrogen_matrix());
  EXPECT_NEAR(g.gaps.back(), ref.values[1] - ref.values[0], 1e-10);
  for (double x : g.gaps) EXPECT_GE(x, 0.0);
}

TEST(GapTrace, StaticDriverHasConstantGap) {
  const auto d = tqa::to_dense(tqa::transverse_field_driver(2));
  const auto g = tqa::gap_trace(tqa::spectrum_trace(tqa::AnnealSchedule(d, d, 1.0), 9, 0), 1);
  for (double x : g.gaps) EXPECT_NEAR(x, 2.0, 1e-13);
}

TEST(GapTrace, LevelRange) {
  const auto t = tqa::spectrum_trace(hydrogen_schedule(1.0), 3, 2);
  EXPECT_THROW(tqa::gap_trace(t, 0), tqa::DomainError);
  EXPECT_THROW(tqa::gap_trace(t, 2), tqa::DomainError);
}

TEST(AdiabaticTrace, StaticScheduleHasZeroNumerator) {
  const auto d = tqa::to_dense(tqa::transverse_field_driver(2));
  const auto a = tqa::adiabatic_trace(tqa::AnnealSchedule(d, d, 1.0), 5, 3);
  for (const auto& row : a.numerators)
    for (double x : row) EXPECT_EQ(x, 0.0);
}

TEST(AdiabaticTrace, DoublingTHalvesNumeratorAndMetric) {
  const auto a = tqa::adiabatic_trace(hydrogen_schedule(4.0), 41, 3);
  const auto b = tqa::adiabatic_trace(hydrogen_schedule(8.0), 41, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < a.times.size(); ++i) {
      EXPECT_NEAR(b.numerators[j][i], 0.5 * a.numerators[j][i], 1e-12);
      ASSERT_EQ(a.metrics[j][i].has_value(), b.metrics[j][i].has_value());
      if (a.metrics[j][i]) {
        EXPECT_NEAR(*b.metrics[j][i], 0.5 * *a.metrics[j][i], 1e-9);
      }
    }
  }
}

TEST(AdiabaticTrace, DegeneratePointsAreMissing) {
  // H(0) = 0 makes every level degenerate with the ground level.
  const auto zero = tqa::DenseOperator::zero(4);
  const auto z = tqa::to_dense(tqa::PauliSum(2, {{1.0, "ZI"}}));
  const auto a = tqa::adiabatic_trace(tqa::AnnealSchedule(zero, z, 1.0), 2, 1);
  EXPECT_FALSE(a.metrics[0][0].has_value());
  EXPECT_FALSE(a.metrics[0][1].has_value());  // ZI keeps E1 = E0
  const auto h = tqa::adiabatic_trace(hydrogen_schedule(1.0), 3, 1);
  EXPECT_TRUE(h.metrics[0][1].has_value());
}

}  // namespace
