#include <gtest/gtest.h>

#include <ostream>
#include <string>

#include "superlie/algebra_file.hpp"
#include "superlie/commutant_counterexample.hpp"
#include "superlie/errors.hpp"
#include "superlie/quasireductive.hpp"
#include "superlie/structure.hpp"

namespace superlie {
namespace {

LieSuperAlgebra fixture(const std::string& name) {
  return load_algebra(std::string(SUPERLIE_FIXTURE_DIR) + "/" + name + ".alg");
}

std::vector<std::size_t> dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

struct Expected {
  std::string name;
  std::size_t center;
  std::size_t commutant;
  std::vector<std::size_t> derived;
  bool quasireductive;
};

void PrintTo(const Expected& e, std::ostream* os) { *os << e.name; }

class FixtureStructure : public ::testing::TestWithParam<Expected> {};

TEST_P(FixtureStructure, Invariants) {
  const Expected& x = GetParam();
  const LieSuperAlgebra l = fixture(x.name);
  ASSERT_TRUE(validate(l).valid);
  const Subspace z = center(l);
  const Subspace c = commutant(l);
  EXPECT_EQ(z.dim(), x.center);
  EXPECT_EQ(c.dim(), x.commutant);
  EXPECT_TRUE(is_ideal(l, z));
  EXPECT_TRUE(is_ideal(l, c));
  const auto series = derived_series(l);
  EXPECT_EQ(dims(series), x.derived);
  EXPECT_EQ(series.front(), c);
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    EXPECT_TRUE(series[i].contains(series[i + 1]));
    EXPECT_TRUE(is_ideal(l, series[i + 1]));
  }
  for (const Subspace& ideal : {z, c}) {
    const LieSuperAlgebra q = quotient(l, ideal);
    EXPECT_EQ(q.dim(), l.dim() - ideal.dim());
    EXPECT_EQ(q.even_dim(), l.even_dim() - ideal.even_dim());
    EXPECT_TRUE(validate(q).valid);
  }
  // L / [L,L] is abelian.
  EXPECT_TRUE(quotient(l, c).is_abelian());
  EXPECT_EQ(is_quasireductive(l).quasireductive, x.quasireductive) << is_quasireductive(l).reason;
}

INSTANTIATE_TEST_SUITE_P(Fixtures, FixtureStructure,
                         ::testing::Values(Expected{"gl11", 1, 3, {3, 1, 0}, true},
                                           Expected{"gl22", 1, 15, {15}, true},
                                           Expected{"sl2", 0, 3, {3}, true},
                                           Expected{"queer", 2, 1, {1, 0}, true},
                                           Expected{"nonabelian2", 0, 1, {1, 0}, false}),
                         [](const auto& info) { return info.param.name; });

TEST(Structure, QueerAlgebraMatchesFixture) {
  const LieSuperAlgebra built = make_queer_commutant_algebra();
  const LieSuperAlgebra loaded = fixture("queer");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(built.basis_bracket(i, j), loaded.basis_bracket(i, j));
  }
  // [L,L] is spanned by 2x + 4y alone.
  EXPECT_TRUE(commutant(built).contains(Vector{1, 2, 0}));
  EXPECT_TRUE(is_solvable(built));
}

TEST(Structure, SubalgebrasAndIdeals) {
  const LieSuperAlgebra l = make_sl2();
  const std::vector<Vector> borel{{1, 0, 0}, {0, 1, 0}};
  const Subspace b = span_in(l, borel);
  EXPECT_TRUE(is_subalgebra(l, b));
  EXPECT_FALSE(is_ideal(l, b));
  EXPECT_THROW(quotient(l, b), PreconditionError);
  const LieSuperAlgebra r = restrict_to(l, b);
  EXPECT_EQ(r.dim(), 2U);
  EXPECT_TRUE(validate(r).valid);
  EXPECT_FALSE(r.is_abelian());
  const std::vector<Vector> ef{{0, 1, 0}, {0, 0, 1}};
  EXPECT_FALSE(is_subalgebra(l, span_in(l, ef)));
}

TEST(Structure, Centralizer) {
  const LieSuperAlgebra l = make_sl2();
  const std::vector<Vector> h{{1, 0, 0}};
  EXPECT_EQ(centralizer(l, span_in(l, h)), span_in(l, h));
  EXPECT_EQ(centralizer(l, zero_of(l)), whole_of(l));
}

TEST(Structure, KillingFormOfSl2) {
  const RationalMatrix k = even_killing_form(make_sl2());
  EXPECT_EQ(k, RationalMatrix(3, 3, {8, 0, 0, 0, 0, 4, 0, 4, 0}));
  EXPECT_EQ(even_radical(make_sl2()).dim(), 0U);
  EXPECT_EQ(even_radical(make_nonabelian2()).dim(), 2U);
}

TEST(Structure, DirectSum) {
  const LieSuperAlgebra s = direct_sum(make_sl2(), fixture("gl11"));
  EXPECT_EQ(s.even_dim(), 5U);
  EXPECT_EQ(s.odd_dim(), 2U);
  EXPECT_TRUE(validate(s).valid);
  EXPECT_EQ(center(s).dim(), 1U);
  EXPECT_EQ(commutant(s).dim(), 6U);
}

TEST(Quasireductive, WitnessForNonSemisimpleCenter) {
  // h central in L_0 = <h>, acting on the odd part by a Jordan block.
  LieSuperAlgebra l(1, 2, {"h", "p", "q"});
  l.set_antisymmetric(1, 0, Vector{0, 1, 0});
  l.set_antisymmetric(2, 0, Vector{0, 1, 1});
  ASSERT_TRUE(validate(l).valid);
  const QuasireductiveCertificate c = is_quasireductive(l);
  EXPECT_FALSE(c.quasireductive);
  EXPECT_TRUE(c.radical_is_center);
  EXPECT_FALSE(c.center_acts_semisimply);
  EXPECT_EQ(c.witness, "h");
}

}  // namespace
}  // namespace superlie
