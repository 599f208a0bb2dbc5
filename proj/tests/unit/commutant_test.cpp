#include <gtest/gtest.h>

#include <random>

#include "superlie/commutant_counterexample.hpp"
#include "superlie/errors.hpp"
#include "superlie/lie_superalgebra.hpp"
#include "superlie/structure.hpp"

namespace superlie {
namespace {

using G = GrassmannElement;

TEST(QueerPoint, ConstructionChecks) {
  const std::size_t q = 2;
  EXPECT_THROW(QueerPoint(G::generator(q, 0), G::zero(q), G::generator(q, 1)), Error);
  EXPECT_THROW(QueerPoint(G::monomial(q, 0b11), G::zero(q), G::generator(q, 1)), NotAUnitError);
  EXPECT_THROW(QueerPoint(G::one(q), G::zero(q), G::one(q)), ParityError);
  const QueerPoint p(G::constant(q, 2), G::one(q), G::generator(q, 0));
  // B = [[t, (1 + a1^{-1} a2) t], [0, t]] with a1 = 2, a2 = 1.
  EXPECT_EQ(p.block_b()(0, 1), make_scalar(3, 2) * G::generator(q, 0));
  EXPECT_EQ(QueerPoint::from_matrix(p.matrix()), p);
}

TEST(QueerPoint, FromMatrixRejectsOtherMatrices) {
  SuperMatrix m = QueerPoint::identity(1).matrix();
  m(0, 1) = G::one(1);
  EXPECT_THROW(QueerPoint::from_matrix(m), PreconditionError);
  EXPECT_THROW(QueerPoint::from_matrix(SuperMatrix::identity(2, 2, 1) + SuperMatrix::elementary(2, 2, 1, 0, 0)),
               PreconditionError);
}

TEST(QueerGroupProperty, GroupLawAgainstMatrices) {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t q = 2 + rng() % 4;
    const QueerPoint a = random_queer_point(q, rng);
    const QueerPoint b = random_queer_point(q, rng);
    const QueerPoint c = random_queer_point(q, rng);
    ASSERT_EQ(queer_multiply(a, b).matrix(), a.matrix() * b.matrix());
    ASSERT_EQ(queer_multiply(queer_multiply(a, b), c), queer_multiply(a, queer_multiply(b, c)));
    ASSERT_EQ(queer_multiply(a, queer_inverse(a)), QueerPoint::identity(q));
    ASSERT_EQ(queer_inverse(a).matrix(), a.matrix().inverse());
    // Oracle for the commutator: four 4x4 products.
    const SuperMatrix comm = a.matrix() * b.matrix() * a.matrix().inverse() * b.matrix().inverse();
    ASSERT_EQ(queer_commutator(a, b).matrix(), comm);
    ASSERT_TRUE(queer_commutator(a, b).t().is_zero());
    ASSERT_TRUE(check_queer_pair(a, b).ok());
  }
}

TEST(QueerLie, RelationsAndVerdict) {
  const QueerLieReport r = queer_lie();
  EXPECT_TRUE(r.relations_vanish);
  EXPECT_EQ(r.vv, Scalar(2) * r.x + Scalar(4) * r.y);
  EXPECT_TRUE(r.x_tangent);
  EXPECT_TRUE(r.y_tangent);
  EXPECT_TRUE(r.v_tangent);
  EXPECT_EQ(r.a_even, RationalMatrix(2, 2, {2, 4, 0, 2}));
  EXPECT_EQ(r.split.semisimple, RationalMatrix(2, 2, {2, 0, 0, 2}));
  EXPECT_EQ(r.verdict, AlgebraicityVerdict::NotAlgebraic);
  EXPECT_TRUE(r.ok());
}

TEST(QueerLie, OtherTangentsLeaveTheSubgroup) {
  EXPECT_FALSE(in_queer_subgroup(DualNumberPoint::tangent(SuperMatrix::elementary(2, 2, 0, 0, 0))));
  EXPECT_FALSE(in_queer_subgroup(DualNumberPoint::tangent(SuperMatrix::elementary(2, 2, 0, 0, 2))));
  EXPECT_FALSE(in_queer_subgroup(DualNumberPoint::tangent(SuperMatrix::elementary(2, 2, 0, 1, 0) +
                                                           SuperMatrix::elementary(2, 2, 0, 3, 2))));
}

TEST(QueerLie, AbstractAlgebra) {
  const LieSuperAlgebra l = make_queer_commutant_algebra();
  EXPECT_TRUE(validate(l).valid);
  EXPECT_EQ(l.format(l.basis_bracket(2, 2)), "2*x + 4*y");
  std::vector<std::size_t> dims;
  for (const auto& s : derived_series(l)) dims.push_back(s.dim());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 0}));
}

TEST(CommutantCounterexample, SeededRun) {
  const CommutantCounterexample c = run_commutant_counterexample(24, 6, 20261016);
  EXPECT_EQ(c.pairs, 24U);
  EXPECT_EQ(c.pairs_ok, 24U);
  EXPECT_TRUE(c.ok());
}

}  // namespace
}  // namespace superlie
