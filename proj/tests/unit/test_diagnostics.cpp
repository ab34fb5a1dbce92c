#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "twistqa/diagnostics.hpp"
#include "twistqa/error.hpp"

namespace {

using tqa::cplx;
using tqa::Matrix;
using tqa::StateVector;

StateVector basis(int dim, int k) {
  StateVector v = StateVector::Zero(dim);
  v(k) = 1.0;
  return v;
}

TEST(Purity, ReferenceValues) {
  StateVector psi(2);
  psi << cplx(0.6, 0.0), cplx(0.0, 0.8);
  EXPECT_NEAR(tqa::purity(tqa::DensityMatrix::pure(psi)), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(tqa::purity(tqa::DensityMatrix::maximally_mixed(2)), 0.5);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.75;
  d(1, 1) = 0.25;
  EXPECT_DOUBLE_EQ(tqa::purity(tqa::DensityMatrix::from_matrix(d)), 0.625);
}

TEST(Purity, EqualsSumOfSquaredEigenvalues) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = testing_support::random_state(8, rng);
    const Eigen::VectorXd lambda = Eigen::SelfAdjointEigenSolver<Matrix>(rho.matrix()).eigenvalues();
    const double p = tqa::purity(rho);
    EXPECT_NEAR(p, lambda.squaredNorm(), 1e-10);
    EXPECT_GE(p, 1.0 / 8 - 1e-9);
    EXPECT_LE(p, 1.0 + 1e-9);
  }
}

TEST(Overlap, ReferenceValues) {
  EXPECT_DOUBLE_EQ(tqa::overlap(basis(2, 0), basis(2, 0)), 1.0);
  EXPECT_DOUBLE_EQ(tqa::overlap(basis(2, 0), basis(2, 1)), 0.0);
  StateVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(tqa::overlap(plus, basis(2, 0)), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Overlap, SymmetricAndPhaseInvariant) {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    StateVector a(4), b(4);
    for (int k = 0; k < 4; ++k) {
      a(k) = {g(rng), g(rng)};
      b(k) = {g(rng), g(rng)};
    }
    a.normalize();
    b.normalize();
    EXPECT_EQ(tqa::overlap(a, b), tqa::overlap(b, a));
    const StateVector rotated = std::polar(1.0, 0.3 * trial) * a;
    EXPECT_NEAR(tqa::overlap(rotated, b), tqa::overlap(a, b), 1e-15);
    EXPECT_LE(tqa::overlap(a, b), 1.0 + 1e-9);
  }
}

TEST(Overlap, RejectsUnnormalizedInput) {
  EXPECT_THROW(tqa::overlap(2.0 * basis(2, 0), basis(2, 0)), tqa::DomainError);
  EXPECT_THROW(tqa::overlap(basis(2, 0), basis(4, 0)), tqa::DimensionError);
}

TEST(EstimationError, AbsoluteDifference) {
  EXPECT_EQ(tqa::estimation_error(-1.0, -1.0), 0.0);
  EXPECT_NEAR(tqa::estimation_error(-0.9, -1.0), 0.1, 1e-15);
  EXPECT_EQ(tqa::estimation_error(-1.0, -0.9), tqa::estimation_error(-0.9, -1.0));
  EXPECT_GT(tqa::estimation_error(1.0, 1.0 + 1e-15), 0.0);
}

}  // namespace
