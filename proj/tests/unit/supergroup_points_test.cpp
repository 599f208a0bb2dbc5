#include <gtest/gtest.h>

#include <random>

#include "superlie/dual_numbers.hpp"
#include "superlie/errors.hpp"
#include "superlie/random.hpp"
#include "superlie/supergroup_points.hpp"

namespace superlie {
namespace {

using G = GrassmannElement;

Parity random_parity(std::mt19937_64& rng) { return (rng() & 1U) ? Parity::Odd : Parity::Even; }

// g = I + theta E_12 in GL(1|1)(Lambda(1)).
GLPoint unipotent_point() {
  SuperMatrix g = SuperMatrix::identity(1, 1, 1);
  g(0, 1) = G::generator(1, 0);
  return GLPoint(g);
}

TEST(GLPoint, ConstructionChecks) {
  EXPECT_THROW(GLPoint(SuperMatrix::elementary(1, 1, 0, 0, 1)), ParityError);
  SuperMatrix singular = SuperMatrix::identity(1, 1, 0);
  singular(0, 0) = G::zero(0);
  EXPECT_THROW(GLPoint{singular}, SingularError);
  const GLPoint g = unipotent_point();
  EXPECT_EQ(g * g.inverse(), GLPoint::identity(1, 1, 1));
}

TEST(GLPoint, ConjugationByUnipotent) {
  // (I + theta E12) E21 (I - theta E12) = E21 + theta (E11 - E22).
  const GLPoint g = unipotent_point();
  const SuperMatrix e21 = SuperMatrix::elementary(1, 1, 1, 1, 0);
  SuperMatrix expected = e21;
  expected(0, 0) = G::generator(1, 0);
  expected(1, 1) = -G::generator(1, 0);
  EXPECT_EQ(adjoint_matrix(g, e21), expected);
  EXPECT_EQ(adjoint_hopf(g, functional_from_matrix(e21)), functional_from_matrix(expected));
  EXPECT_EQ(adjoint_dual_numbers(g, functional_from_matrix(e21)), functional_from_matrix(expected));
}

TEST(Functionals, IdentificationIsAnInvolution) {
  const SuperMatrix e21 = SuperMatrix::elementary(1, 1, 0, 1, 0);
  const SuperMatrix f = functional_from_matrix(e21);
  // The odd part picks up the parity matrix on the left.
  EXPECT_EQ(f, Scalar(-1) * e21);
  EXPECT_EQ(matrix_from_functional(f), e21);
  const SuperMatrix e11 = SuperMatrix::elementary(1, 1, 0, 0, 0);
  EXPECT_EQ(functional_from_matrix(e11), e11);
}

TEST(Functionals, BracketOfOddElementaryFunctionals) {
  const SuperMatrix u = functional_from_matrix(SuperMatrix::elementary(1, 1, 0, 0, 1));
  const SuperMatrix v = functional_from_matrix(SuperMatrix::elementary(1, 1, 0, 1, 0));
  EXPECT_EQ(convolution_bracket(u, v), SuperMatrix::identity(1, 1, 0));
  EXPECT_EQ(convolution_bracket(v, u), SuperMatrix::identity(1, 1, 0));
  EXPECT_TRUE(convolution_bracket(u, u).is_zero());
}

TEST(FunctionalsProperty, ConvolutionBracketIsMatrixBracket) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + rng() % 2;
    const std::size_t n = 1 + rng() % 2;
    const SuperMatrix x = random_supermatrix(m, n, 3, random_parity(rng), rng);
    const SuperMatrix y = random_supermatrix(m, n, 3, random_parity(rng), rng);
    ASSERT_EQ(convolution_bracket(functional_from_matrix(x), functional_from_matrix(y)),
              functional_from_matrix(superbracket(x, y)));
    ASSERT_EQ(matrix_from_functional(functional_from_matrix(x)), x);
  }
}

TEST(FunctionalsProperty, ConvolutionIsLinearOverLambda) {
  // (v (x) a) * (w (x) b) = (-1)^{|a||w|} (v * w) (x) ab
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 60; ++trial) {
    const Parity pv = random_parity(rng);
    const Parity pw = random_parity(rng);
    const Parity pa = random_parity(rng);
    const Parity pb = random_parity(rng);
    const SuperMatrix v = random_supermatrix(1, 1, 0, pv, rng);
    const SuperMatrix w = random_supermatrix(1, 1, 0, pw, rng);
    const G a = random_grassmann(3, pa, rng);
    const G b = random_grassmann(3, pb, rng);
    const SuperMatrix lhs = convolution(tensor_functional(v, a), tensor_functional(w, b));
    const SuperMatrix rhs = Scalar(koszul_sign(pa, pw)) * tensor_functional(convolution(v, w), a * b);
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(DualNumbers, ArithmeticAndInverse) {
  const std::size_t q = 2;
  const DualNumber x{G::constant(q, 2), G::generator(q, 0) * G::generator(q, 1), G::generator(q, 0)};
  const DualNumber y{G::constant(q, 3), G::one(q), G::generator(q, 1)};
  const DualNumber xy = x * y;
  EXPECT_EQ(xy.base, G::constant(q, 6));
  EXPECT_EQ(xy.eps0, G::constant(q, 2) + Scalar(3) * G::generator(q, 0) * G::generator(q, 1));
  EXPECT_EQ(xy.eps1, Scalar(2) * G::generator(q, 1) + Scalar(3) * G::generator(q, 0));
  const DualNumber one = DualNumber::constant(G::one(q));
  EXPECT_EQ(x * x.inverse(), one);
  EXPECT_EQ(x.inverse() * x, one);
  EXPECT_EQ(project(xy), G::constant(q, 6));
}

TEST(DualNumbers, OddCoefficientsTwistAcrossEpsilonOne) {
  // (theta) * (e1) = theta e1 = -e1 theta: the e1-part of a * e1 c is twist(a) c.
  const std::size_t q = 1;
  const DualNumber theta = DualNumber::constant(G::generator(q, 0));
  const DualNumber e1{G::zero(q), G::zero(q), G::one(q)};
  EXPECT_EQ((theta * e1).eps1, -G::generator(q, 0));
  EXPECT_EQ((e1 * theta).eps1, G::generator(q, 0));
}

TEST(DualNumberPoints, TangentsLieInTheKernel) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const SuperMatrix u = random_supermatrix(1, 1, 2, random_parity(rng), rng);
    const DualNumberPoint p = DualNumberPoint::tangent(u);
    ASSERT_TRUE(p.in_kernel_of_projection());
    ASSERT_EQ(p * p.inverse(), DualNumberPoint::tangent(SuperMatrix(1, 1, 2)));
  }
}

TEST(Adjoint, SeededPairsInGL11) {
  const AdjointCheckReport r = verify_adjoint_action(1, 1, 4, 50, 3);
  EXPECT_EQ(r.pairs, 50U);
  EXPECT_EQ(r.hopf_equals_matrix, 50U);
  EXPECT_EQ(r.hopf_equals_dual_numbers, 50U);
  EXPECT_EQ(r.bracket_equivariant, 50U);
  EXPECT_TRUE(r.ok());
}

TEST(Adjoint, SeededPairsInGL21) { EXPECT_TRUE(verify_adjoint_action(2, 1, 2, 10, 4).ok()); }

}  // namespace
}  // namespace superlie
