#include <gtest/gtest.h>

#include <random>

#include "superlie/errors.hpp"
#include "superlie/random.hpp"
#include "superlie/supermatrix.hpp"

namespace superlie {
namespace {

using G = GrassmannElement;

Parity random_parity(std::mt19937_64& rng) { return (rng() & 1U) ? Parity::Odd : Parity::Even; }

TEST(SuperMatrix, BlockParities) {
  const SuperMatrix e = SuperMatrix::elementary(2, 1, 0, 0, 2);
  EXPECT_EQ(e.block_parity(0, 2), Parity::Odd);
  EXPECT_EQ(e.block_parity(2, 2), Parity::Even);
  EXPECT_EQ(e.parity(), Parity::Odd);
  EXPECT_EQ(SuperMatrix::elementary(2, 1, 0, 1, 0).parity(), Parity::Even);
  EXPECT_FALSE((e + SuperMatrix::identity(2, 1, 0)).parity().has_value());
  EXPECT_EQ((e + SuperMatrix::identity(2, 1, 0)).part(Parity::Odd), e);
}

TEST(SuperMatrix, GrassmannEntriesShiftParity) {
  // theta * E_12 in gl(1|1): odd block times odd scalar is an even matrix.
  SuperMatrix m(1, 1, 1);
  m(0, 1) = G::generator(1, 0);
  EXPECT_TRUE(m.is_even());
  m(0, 0) = G::generator(1, 0);
  EXPECT_FALSE(m.parity().has_value());
}

TEST(SuperMatrix, InverseOfUnipotent) {
  SuperMatrix g = SuperMatrix::identity(1, 1, 1);
  g(0, 1) = G::generator(1, 0);
  SuperMatrix expected = SuperMatrix::identity(1, 1, 1);
  expected(0, 1) = -G::generator(1, 0);
  EXPECT_EQ(g.inverse(), expected);
}

TEST(SuperMatrix, InverseErrors) {
  EXPECT_THROW(SuperMatrix::elementary(1, 1, 0, 0, 1).inverse(), ParityError);
  SuperMatrix singular = SuperMatrix::identity(1, 1, 0);
  singular(1, 1) = G::zero(0);
  EXPECT_THROW(singular.inverse(), SingularError);
}

TEST(SuperMatrix, BracketOfOddElementaries) {
  // [E_12, E_21] = E_11 + E_22 in gl(1|1).
  const SuperMatrix e12 = SuperMatrix::elementary(1, 1, 0, 0, 1);
  const SuperMatrix e21 = SuperMatrix::elementary(1, 1, 0, 1, 0);
  EXPECT_EQ(superbracket(e12, e21), SuperMatrix::identity(1, 1, 0));
  EXPECT_TRUE(superbracket(e12, e12).is_zero());
}

TEST(SuperMatrix, FromScalarsAndBody) {
  const RationalMatrix r(3, 3, {1, 2, 0, 0, 1, 0, 4, 0, 1});
  const SuperMatrix m = SuperMatrix::from_scalars(2, 1, r, 2);
  EXPECT_EQ(m.body(), r);
  EXPECT_EQ(m.generators(), 2U);
  EXPECT_THROW(SuperMatrix::from_scalars(1, 1, r), DimensionError);
}

TEST(SuperMatrix, ParityMatrixSquaresToIdentity) {
  const SuperMatrix p = parity_matrix(2, 2, 1);
  EXPECT_EQ(p * p, SuperMatrix::identity(2, 2, 1));
  EXPECT_EQ(p(3, 3), G::constant(1, -1));
}

TEST(SuperMatrixProperty, InverseOfRandomEvenMatrices) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 1 + rng() % 2;
    const std::size_t n = rng() % 3;
    const std::size_t q = rng() % 5;
    const SuperMatrix g = random_invertible_supermatrix(m, n, q, rng);
    const SuperMatrix inv = g.inverse();
    ASSERT_EQ(g * inv, SuperMatrix::identity(m, n, q));
    ASSERT_EQ(inv * g, SuperMatrix::identity(m, n, q));
    ASSERT_TRUE(inv.is_even());
  }
}

TEST(SuperMatrixProperty, BracketIsASuperLieBracket) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 1 + rng() % 2;
    const std::size_t n = 1 + rng() % 2;
    const std::size_t q = rng() % 4;
    const Parity px = random_parity(rng);
    const Parity py = random_parity(rng);
    const Parity pz = random_parity(rng);
    const SuperMatrix x = random_supermatrix(m, n, q, px, rng);
    const SuperMatrix y = random_supermatrix(m, n, q, py, rng);
    const SuperMatrix z = random_supermatrix(m, n, q, pz, rng);
    ASSERT_EQ(superbracket(x, y), Scalar(-koszul_sign(px, py)) * superbracket(y, x));
    const SuperMatrix lhs = superbracket(superbracket(x, y), z);
    const SuperMatrix rhs =
        superbracket(x, superbracket(y, z)) + Scalar(koszul_sign(py, pz)) * superbracket(superbracket(x, z), y);
    ASSERT_EQ(lhs, rhs);
    if (!superbracket(x, y).is_zero()) ASSERT_EQ(superbracket(x, y).parity(), px + py);
    ASSERT_EQ((x * y) * z, x * (y * z));
  }
}

}  // namespace
}  // namespace superlie
