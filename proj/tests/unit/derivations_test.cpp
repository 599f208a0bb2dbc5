#include <gtest/gtest.h>

#include <random>
#include <string>

#include "superlie/algebra_file.hpp"
#include "superlie/derivations.hpp"
#include "superlie/grassmann_derivations.hpp"
#include "superlie/random.hpp"
#include "superlie/structure.hpp"

namespace superlie {
namespace {

using G = GrassmannElement;

LieSuperAlgebra fixture(const std::string& name) {
  return load_algebra(std::string(SUPERLIE_FIXTURE_DIR) + "/" + name + ".alg");
}

Parity random_parity(std::mt19937_64& rng) { return (rng() & 1U) ? Parity::Odd : Parity::Even; }

// Oracle: the Leibniz residual of every elementary operator E_rc of parity p,
// stacked as columns; its null space is Der(L)_p.
std::size_t leibniz_nullity(const LieSuperAlgebra& l, Parity p) {
  const std::size_t n = l.dim();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (l.parity(r) + l.parity(c) == p) unknowns.emplace_back(r, c);
    }
  }
  std::vector<Vector> columns;
  for (const auto& [r, c] : unknowns) {
    RationalMatrix m(n, n);
    m(r, c) = 1;
    Vector residual;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Vector xi = unit_vector(n, i);
        const Vector xj = unit_vector(n, j);
        const Vector lhs = m * l.bracket(xi, xj);
        const Vector rhs = l.bracket(xi, m * xj) + Scalar(koszul_sign(p, l.parity(j))) * l.bracket(m * xi, xj);
        const Vector d = lhs - rhs;
        residual.insert(residual.end(), d.begin(), d.end());
      }
    }
    columns.push_back(residual);
  }
  if (columns.empty()) return 0;
  const RationalMatrix system = RationalMatrix::from_columns(columns, columns.front().size());
  return unknowns.size() - rank(system);
}

class DerivationOracle : public ::testing::TestWithParam<std::string> {};

TEST_P(DerivationOracle, DimensionsMatchLeibnizSystem) {
  const LieSuperAlgebra l = fixture(GetParam());
  const DerivationSpace d = derivation_space(l);
  EXPECT_EQ(d.even.size(), leibniz_nullity(l, Parity::Even));
  EXPECT_EQ(d.odd.size(), leibniz_nullity(l, Parity::Odd));
  for (const auto& op : d.all()) EXPECT_TRUE(is_derivation(l, op));
  for (const auto& op : inner_derivations(l)) EXPECT_TRUE(is_derivation(l, op));
  const Subspace all = operator_span(l, d.all());
  EXPECT_EQ(all.dim(), d.dim());
  EXPECT_TRUE(all.contains(inner_derivation_span(l)));
  const DerivationAlgebra alg = derivation_algebra(l);
  EXPECT_EQ(alg.algebra.dim(), d.dim());
  EXPECT_TRUE(validate(alg.algebra).valid);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, DerivationOracle,
                         ::testing::Values("gl11", "sl2", "queer", "nonabelian2"));

TEST(Derivations, KnownDimensions) {
  EXPECT_EQ(derivation_space(make_sl2()).dim(), 3U);
  EXPECT_EQ(outer_quotient_dim(make_sl2()), (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_EQ(derivation_space(make_nonabelian2()).dim(), 2U);
  // Der of an abelian (1|1) algebra is gl(1|1).
  EXPECT_EQ(derivation_space(make_abelian(1, 1)).dim(), 4U);
  EXPECT_EQ(outer_quotient_dim(make_abelian(1, 1)), (std::pair<std::size_t, std::size_t>{2, 2}));
}

TEST(Derivations, RejectsNonDerivations) {
  const LieSuperAlgebra l = make_sl2();
  SuperDerivation d{Parity::Even, RationalMatrix::identity(3)};
  EXPECT_FALSE(is_derivation(l, d));
  d.parity = Parity::Odd;
  d.matrix = RationalMatrix(3, 3);
  EXPECT_TRUE(is_derivation(l, d));
}

TEST(DerivationsProperty, BracketOfDerivationsIsDerivation) {
  std::mt19937_64 rng(61);
  const LieSuperAlgebra l = fixture("gl11");
  const DerivationSpace d = derivation_space(l);
  const auto all = d.all();
  for (int trial = 0; trial < 30; ++trial) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const SuperDerivation c = operator_bracket(a, b);
    ASSERT_EQ(c.parity, a.parity + b.parity);
    ASSERT_TRUE(is_derivation(l, c));
    const SuperDerivation back = operator_bracket(b, a);
    ASSERT_EQ(back.matrix, Scalar(-koszul_sign(a.parity, b.parity)) * c.matrix);
  }
}

TEST(GrassmannDerivations, RightPartials) {
  const G z1z2 = G::monomial(2, 0b11);
  EXPECT_EQ(right_partial(z1z2, 0), -G::generator(2, 1));
  EXPECT_EQ(right_partial(z1z2, 1), G::generator(2, 0));
  EXPECT_TRUE(right_partial(G::one(2), 0).is_zero());
}

TEST(GrassmannDerivations, EulerActsByDegree) {
  // E = sum_i (d/dz_i) z_i; [E, d/dz_1] = d/dz_1 with d applied first.
  const GrassmannDerivation euler({G::generator(2, 0), G::generator(2, 1)});
  const GrassmannDerivation d1 = GrassmannDerivation::basis(2, 0, 0);
  EXPECT_EQ(euler.parity(), Parity::Even);
  EXPECT_EQ(d1.parity(), Parity::Odd);
  EXPECT_EQ(bracket(euler, d1), d1);
  EXPECT_EQ(euler.apply(G::monomial(2, 0b11)), Scalar(2) * G::monomial(2, 0b11));
}

TEST(GrassmannDerivations, AlgebraShape) {
  const GrassmannDerivationAlgebra w = grassmann_derivations(2);
  EXPECT_EQ(w.algebra.dim(), 8U);
  EXPECT_EQ(w.algebra.even_dim(), 4U);
  EXPECT_TRUE(validate(w.algebra).valid);
  EXPECT_EQ(w.algebra.label(w.index_of(0, 0)), "d1*1");
  EXPECT_EQ(w.algebra.label(w.index_of(0, 0b10)), "d1*z2");
  EXPECT_EQ(w.degree[w.index_of(1, 0b11)], 1);
  EXPECT_EQ(grassmann_derivations(3).algebra.dim(), 24U);
}

TEST(GrassmannDerivationsProperty, RightLeibnizRuleAndBracket) {
  std::mt19937_64 rng(62);
  constexpr std::size_t n = 3;
  const GrassmannDerivationAlgebra w = grassmann_derivations(n);
  for (int trial = 0; trial < 100; ++trial) {
    const GrassmannDerivation d = w.derivation(rng() % w.algebra.dim());
    const GrassmannDerivation e = w.derivation(rng() % w.algebra.dim());
    const Parity pa = random_parity(rng);
    const Parity pb = random_parity(rng);
    const G a = random_grassmann(n, pa, rng);
    const G b = random_grassmann(n, pb, rng);
    ASSERT_EQ(d.apply(a * b), a * d.apply(b) + Scalar(koszul_sign(d.parity(), pb)) * (d.apply(a) * b));
    const G via_bracket = bracket(d, e).apply(a);
    const G direct = e.apply(d.apply(a)) - Scalar(koszul_sign(d.parity(), e.parity())) * d.apply(e.apply(a));
    ASSERT_EQ(via_bracket, direct);
    ASSERT_EQ(w.derivation(0), w.derivation(w.index_of(w.basis[0].first, w.basis[0].second)));
  }
}

}  // namespace
}  // namespace superlie
