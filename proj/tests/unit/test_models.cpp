#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "reference_models.hpp"
#include "twistqa/error.hpp"
#include "twistqa/models.hpp"
#include "twistqa/spectral.hpp"

namespace {

using std::numbers::pi;
using tqa::cplx;
using tqa::Matrix;
using tqa::TwistAngles;

TwistAngles random_angles(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-pi, pi);
  std::vector<double> t(n);
  for (auto& x : t) x = u(rng);
  return TwistAngles(t);
}

TEST(TransverseField, GroundStateAndSpectrum) {
  EXPECT_THROW(tqa::transverse_field_driver(0), tqa::DomainError);
  const auto one = tqa::eigendecompose(tqa::to_dense(tqa::transverse_field_driver(1)));
  EXPECT_NEAR(one.values(0), -1.0, 1e-14);
  EXPECT_NEAR(std::abs(one.vectors(0, 0)), 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(std::abs(one.vectors(1, 0)), 1.0 / std::sqrt(2.0), 1e-14);
  const auto two = tqa::eigendecompose(tqa::to_dense(tqa::transverse_field_driver(2)));
  EXPECT_NEAR(two.values(0), -2.0, 1e-14);
  EXPECT_NEAR(two.values(1), 0.0, 1e-14);
  EXPECT_NEAR(two.values(2), 0.0, 1e-14);
  EXPECT_NEAR(two.values(3), 2.0, 1e-14);
  EXPECT_NEAR(tqa::eigendecompose(tqa::to_dense(tqa::transverse_field_driver(4))).values(0), -4.0, 1e-13);
}

TEST(Hydrogen, TableCoefficients) {
  const auto h = tqa::hydrogen_hamiltonian();
  EXPECT_EQ(h.coefficient("IIII"), cplx(-0.09706626816762881));
  EXPECT_EQ(h.coefficient("YYXX"), cplx(-0.04530261550379928));
  EXPECT_EQ(h.coefficient("XXYY"), cplx(-0.04530261550379928));
  EXPECT_EQ(h.coefficient("ZIIZ"), cplx(0.16592785033770355));
}

TEST(Hydrogen, GroundEnergyMatchesReferenceSolver) {
  const auto ref = oracle::jacobi_eigen(oracle::hydrogen_matrix());
  EXPECT_NEAR(ref.values[0], testing_support::kHydrogenGroundEnergy, 1e-12);
  const auto ours = tqa::eigendecompose(tqa::to_dense(tqa::hydrogen_hamiltonian()));
  EXPECT_NEAR(ours.values(0), testing_support::kHydrogenGroundEnergy, 1e-10);
}

TEST(SpinStar, DecoupledCaseIsTwoFreeSpins) {
  EXPECT_THROW(tqa::deformed_spin_star(0, 1, 1, 1), tqa::DomainError);
  const auto es = tqa::eigendecompose(tqa::to_dense(tqa::deformed_spin_star(1, 1.0, 1.0, 0.0)));
  EXPECT_NEAR(es.values(0), -2.0, 1e-14);
  EXPECT_NEAR(es.values(1), 0.0, 1e-14);
  EXPECT_NEAR(es.values(2), 0.0, 1e-14);
  EXPECT_NEAR(es.values(3), 2.0, 1e-14);
}

TEST(SpinStar, MatchesEntrywiseReference) {
  for (int n : {1, 2, 3, 4}) {
    const auto ours = tqa::to_dense(tqa::deformed_spin_star(n, 1.0, 0.7, 15.0)).matrix();
    const auto ref = testing_support::to_eigen(oracle::spin_star_matrix(n, 1.0, 0.7, 15.0));
    EXPECT_LT(tqa::max_abs_diff(ours, ref), 1e-13) << "n_peripheral=" << n;
  }
}

TEST(SpinStar, PaperParametersAreHermitian) {
  const auto m = tqa::to_dense(tqa::deformed_spin_star(4, 1.0, 1.0, 15.0));
  EXPECT_LE(tqa::hermiticity_defect(m.matrix()), 1e-12);
}

TEST(PhasedWState, IsNormalizedSingleExcitation) {
  const auto w = tqa::phased_w_state(4, 2.0 * pi / 4.0);
  EXPECT_NEAR(w.norm(), 1.0, 1e-14);
  // site 1 carries the excitation in basis state 0111
  EXPECT_NEAR(std::abs(w(0b0111) - std::polar(0.5, 2.0 * pi / 4.0)), 0.0, 1e-15);
  EXPECT_EQ(w(0b1111), cplx(0.0));
}

TEST(TwistOperator, ZeroAnglesGiveIdentity) {
  EXPECT_EQ(tqa::twist_operator(TwistAngles::zeros(3)).matrix(), Matrix::Identity(8, 8));
}

TEST(TwistOperator, QuarterTurnIsISigmaY) {
  const auto u = tqa::twist_operator(TwistAngles{pi / 2}).matrix();
  // i sigma_y = [[0, 1], [-1, 0]]
  EXPECT_NEAR(std::abs(u(0, 1) - cplx(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 0) - cplx(-1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(0, 0)), 0.0, 1e-15);
}

TEST(TwistOperator, IsUnitary) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = tqa::twist_operator(random_angles(4, rng)).matrix();
    EXPECT_LT(tqa::max_abs_diff(u.adjoint() * u, Matrix::Identity(16, 16)), 1e-12);
  }
}

TEST(TwistedDriver, SingleQubitHandChecks) {
  const auto driver = tqa::transverse_field_driver(1);
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  EXPECT_LT(tqa::max_abs_diff(tqa::twisted_driver(driver, TwistAngles{pi / 4}).matrix(), z), 1e-15);
  EXPECT_LT(tqa::max_abs_diff(tqa::twisted_driver(driver, TwistAngles{pi / 2}).matrix(), x), 1e-15);
  EXPECT_EQ(tqa::twisted_driver(driver, TwistAngles{0.0}).matrix(), (-x).eval());
}

TEST(TwistedDriver, LengthMismatchThrows) {
  EXPECT_THROW(tqa::twisted_driver(tqa::transverse_field_driver(3), TwistAngles{0.1, 0.2}), tqa::DimensionError);
}

TEST(TwistedDriver, MatchesClosedFormAndKeepsSpectrum) {
  std::mt19937_64 rng(2024);
  const auto driver = tqa::transverse_field_driver(4);
  const auto base = tqa::eigendecompose(tqa::to_dense(driver)).values;
  for (int trial = 0; trial < 100; ++trial) {
    const auto angles = random_angles(4, rng);
    const auto twisted = tqa::twisted_driver(driver, angles);
    EXPECT_LE(tqa::max_abs_diff(twisted.matrix(), tqa::to_dense(tqa::twisted_transverse_field(angles)).matrix()),
              1e-10);
    EXPECT_LE((tqa::eigendecompose(twisted).values - base).cwiseAbs().maxCoeff(), 1e-10);
  }
}

class ScheduleTest : public ::testing::Test {
 protected:
  tqa::DenseOperator driver = tqa::to_dense(tqa::transverse_field_driver(4));
  tqa::DenseOperator problem = tqa::to_dense(tqa::hydrogen_hamiltonian());
};

TEST_F(ScheduleTest, EndpointsAndMidpoint) {
  const tqa::AnnealSchedule s(driver, problem, 7.0);
  EXPECT_EQ(tqa::hamiltonian_at(s, 0.0).matrix(), driver.matrix());
  EXPECT_EQ(tqa::hamiltonian_at(s, 7.0).matrix(), problem.matrix());
  const Matrix mean = 0.5 * (driver.matrix() + problem.matrix());
  EXPECT_LT(tqa::max_abs_diff(tqa::hamiltonian_at(s, 3.5).matrix(), mean), 1e-15);
  EXPECT_THROW(tqa::hamiltonian_at(s, -0.1), tqa::DomainError);
  EXPECT_THROW(tqa::hamiltonian_at(s, 7.1), tqa::DomainError);
}

TEST_F(ScheduleTest, RejectsMismatchedOperators) {
  EXPECT_THROW(tqa::AnnealSchedule(driver, tqa::DenseOperator::identity(8), 1.0), tqa::DimensionError);
}

TEST_F(ScheduleTest, TimeDerivative) {
  EXPECT_TRUE(tqa::hamiltonian_time_derivative(tqa::AnnealSchedule(driver, driver, 3.0)).matrix().isZero(0.0));
  const auto d1 = tqa::hamiltonian_time_derivative(tqa::AnnealSchedule(driver, problem, 5.0)).matrix();
  const auto d2 = tqa::hamiltonian_time_derivative(tqa::AnnealSchedule(driver, problem, 10.0)).matrix();
  EXPECT_LT(tqa::max_abs_diff(d2, 0.5 * d1), 1e-16);
  const cplx expected = (problem(0, 0) - driver(0, 0)) / 5.0;
  EXPECT_NEAR(std::abs(d1(0, 0) - expected), 0.0, 1e-16);
}

TEST(AnnealConfig, Validation) {
  tqa::AnnealConfig c;
  EXPECT_NO_THROW(c.validate());
  c.T = 0.0;
  EXPECT_THROW(c.validate(), tqa::DomainError);
  c = {};
  c.n_time_steps = 1;
  EXPECT_THROW(c.validate(), tqa::DomainError);
  c = {};
  c.gamma = -1e-3;
  EXPECT_THROW(c.validate(), tqa::DomainError);
}

TEST(AnnealConfig, StepFloorFromMaxDt) {
  tqa::AnnealConfig c;
  c.T = 100.0;
  c.n_time_steps = 10;
  EXPECT_EQ(c.effective_steps(), 10);
  c.max_dt = 0.1;
  EXPECT_EQ(c.effective_steps(), 1000);
  c.n_time_steps = 5000;
  EXPECT_EQ(c.effective_steps(), 5000);
}

TEST(TwistAngles, RejectsNonFinite) {
  EXPECT_ANY_THROW(TwistAngles({0.0, std::nan("")}));
  EXPECT_ANY_THROW(TwistAngles({INFINITY}));
}

}  // namespace
