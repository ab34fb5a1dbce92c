#include <gtest/gtest.h>

#include "helpers.hpp"
#include "twistqa/dense.hpp"
#include "twistqa/density_matrix.hpp"
#include "twistqa/error.hpp"

namespace {

using tqa::cplx;
using tqa::DenseOperator;
using tqa::Matrix;

Matrix pauli(char axis) {
  Matrix m(2, 2);
  switch (axis) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

TEST(DenseOperator, RejectsNonPowerOfTwo) {
  EXPECT_THROW(DenseOperator(Matrix::Zero(3, 3)), tqa::DimensionError);
  EXPECT_THROW(DenseOperator(Matrix::Zero(2, 4)), tqa::DimensionError);
  EXPECT_EQ(DenseOperator(Matrix::Zero(8, 8)).n_qubits(), 3);
}

TEST(DenseOperator, SigmaYIsSelfAdjoint) {
  const DenseOperator y(pauli('Y'));
  EXPECT_EQ(y.adjoint().matrix(), y.matrix());
  EXPECT_TRUE(y.is_hermitian());
}

TEST(DenseOperator, IdentityIsNeutral) {
  std::mt19937_64 rng(7);
  const DenseOperator a(testing_support::random_hermitian(4, rng));
  EXPECT_EQ((DenseOperator::identity(4) * a).matrix(), a.matrix());
}

TEST(DenseOperator, XTimesYIsIZ) {
  const auto xy = DenseOperator(pauli('X')) * DenseOperator(pauli('Y'));
  EXPECT_EQ(xy.matrix(), (cplx(0, 1) * pauli('Z')).eval());
}

TEST(DenseOperator, ArithmeticChecksDimensions) {
  EXPECT_THROW(DenseOperator::identity(2) * DenseOperator::identity(4), tqa::DimensionError);
  EXPECT_THROW(DenseOperator::identity(2) + DenseOperator::identity(4), tqa::DimensionError);
  const auto s = tqa::scale(DenseOperator::identity(2), cplx(0, 2));
  EXPECT_EQ(s(1, 1), cplx(0, 2));
}

TEST(DenseOperator, KronPutsFirstFactorInHighBits) {
  const Matrix zx = tqa::kron(pauli('Z'), pauli('X'));
  // |00> -> |01>; |10> -> -|11>
  EXPECT_EQ(zx(1, 0), cplx(1, 0));
  EXPECT_EQ(zx(3, 2), cplx(-1, 0));
}

TEST(DensityMatrix, ValidatesInvariants) {
  Matrix bad = Matrix::Identity(2, 2);
  EXPECT_THROW(tqa::DensityMatrix::from_matrix(bad), tqa::NumericalError);  // trace 2
  Matrix nonherm = 0.5 * Matrix::Identity(2, 2);
  nonherm(0, 1) = 0.1;
  EXPECT_THROW(tqa::DensityMatrix::from_matrix(nonherm), tqa::NumericalError);
  Matrix negative(2, 2);
  negative << 1.5, 0, 0, -0.5;
  EXPECT_THROW(tqa::DensityMatrix::from_matrix(negative), tqa::NumericalError);
  EXPECT_NO_THROW(tqa::DensityMatrix::maximally_mixed(4).validate());
}

TEST(DensityMatrix, PureRequiresUnitNorm) {
  tqa::StateVector psi(2);
  psi << 1.0, 1.0;
  EXPECT_THROW(tqa::DensityMatrix::pure(psi), tqa::DomainError);
  psi /= std::sqrt(2.0);
  const auto rho = tqa::DensityMatrix::pure(psi);
  EXPECT_NEAR(rho(0, 1).real(), 0.5, 1e-15);
}

}  // namespace
