#include <gtest/gtest.h>

#include <algorithm>

#include "superlie/coaction.hpp"
#include "superlie/coaction_counterexample.hpp"
#include "superlie/errors.hpp"

namespace superlie {
namespace {

// X coordinates t | z1 | z2 z3 and G coordinates u v.
Monomial x_mono(std::int64_t t, std::uint32_t z1, std::uint32_t z2, std::uint32_t z3) { return {{t}, {z1, z2, z3}}; }
Monomial g_mono(std::uint32_t u, std::uint32_t v) { return {{}, {u, v}}; }

TEST(Coaction, CounterexampleDataSatisfiesAxioms) {
  const CoactionReport report = verify_coaction(coaction_counterexample_data(), 4);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.failures.empty());
  EXPECT_TRUE(report.characters_in_odd_square);
  EXPECT_GT(report.checks, 0U);
}

TEST(Coaction, ImageOfTheTorusGenerator) {
  const Coaction rho(coaction_counterexample_data());
  const HopfTensor rt = rho.apply(x_mono(1, 0, 0, 0));
  EXPECT_EQ(rt.terms().size(), 5U);
  EXPECT_EQ(rt.coefficient({x_mono(1, 0, 0, 0), g_mono(0, 0)}), Scalar(1));
  EXPECT_EQ(rt.coefficient({x_mono(1, 1, 0, 0), g_mono(1, 1)}), Scalar(1));
  EXPECT_EQ(rt.coefficient({x_mono(1, 0, 1, 0), g_mono(1, 0)}), Scalar(1));
  EXPECT_EQ(rt.coefficient({x_mono(1, 0, 0, 1), g_mono(0, 1)}), Scalar(1));
  // (tz2 (x) u)(z3 (x) v) = -tz2z3 (x) uv under the Koszul rule.
  EXPECT_EQ(rt.coefficient({x_mono(1, 0, 1, 1), g_mono(1, 1)}), Scalar(-1));
}

TEST(Coaction, SquareOfTheTorusGenerator) {
  const Coaction rho(coaction_counterexample_data());
  const HopfTensor rt2 = rho.apply(x_mono(2, 0, 0, 0));
  EXPECT_EQ(rt2.coefficient({x_mono(2, 0, 1, 0), g_mono(1, 0)}), Scalar(2));
  EXPECT_EQ(rt2, rho.apply(x_mono(1, 0, 0, 0)) * rho.apply(x_mono(1, 0, 0, 0)));
  EXPECT_EQ(rho.character_value(1, {2}), Scalar(2) * rho.character_value(1, {1}));
  EXPECT_EQ(rho.character_value(1, {-1}), -rho.character_value(1, {1}));
}

TEST(Coaction, PrimitiveImages) {
  const Coaction rho(coaction_counterexample_data());
  // rho*(z2) = z1 (x) f12 + z2 (x) f22 = -z1 (x) v + z2 (x) 1.
  const HopfTensor rz2 = rho.apply(x_mono(0, 0, 1, 0));
  EXPECT_EQ(rz2.terms().size(), 2U);
  EXPECT_EQ(rz2.coefficient({x_mono(0, 1, 0, 0), g_mono(0, 1)}), Scalar(-1));
  EXPECT_EQ(rz2.coefficient({x_mono(0, 0, 1, 0), g_mono(0, 0)}), Scalar(1));
}

TEST(Coaction, CoproductOfTheFirstCharacter) {
  const CoactionData data = coaction_counterexample_data();
  const HopfTensor d = data.g.comultiply(data.characters[0][0]);
  EXPECT_EQ(d.coefficient({g_mono(1, 1), g_mono(0, 0)}), Scalar(1));
  EXPECT_EQ(d.coefficient({g_mono(1, 0), g_mono(0, 1)}), Scalar(1));
  EXPECT_EQ(d.coefficient({g_mono(0, 1), g_mono(1, 0)}), Scalar(-1));
  EXPECT_EQ(d.coefficient({g_mono(0, 0), g_mono(1, 1)}), Scalar(1));
}

TEST(Coaction, CoassociativeOnMixedMonomials) {
  const Coaction rho(coaction_counterexample_data());
  for (std::int64_t t : {-1, 0, 1, 2}) {
    for (std::uint32_t z1 : {0U, 2U}) {
      EXPECT_TRUE(comodule_coassociative_on(rho, rho.data().x.monomial(x_mono(t, z1, 1, 1))));
    }
  }
}

TEST(CoactionMutation, WrongSignBreaksCompatibility) {
  CoactionData data = coaction_counterexample_data();
  data.f[0][1] = -data.f[0][1];
  const CoactionReport report = verify_coaction(data, 3);
  EXPECT_FALSE(report.ok());
  EXPECT_FALSE(report.compatibility);
  EXPECT_TRUE(report.f_comatrix);
  const bool names_first = std::any_of(report.failures.begin(), report.failures.end(),
                                       [](const std::string& f) { return f.starts_with("Delta_G(f_1("); });
  EXPECT_TRUE(names_first);
}

TEST(CoactionMutation, NonNilpotentCharacterIsRejected) {
  CoactionData data = coaction_counterexample_data();
  data.characters[0][0] = data.g.one();
  EXPECT_THROW(Coaction{data}, PreconditionError);
}

TEST(CoactionCounterexample, AllChecksPass) {
  const CoactionCounterexample ex = run_coaction_counterexample(4);
  EXPECT_TRUE(ex.ok);
  EXPECT_TRUE(ex.axioms.ok());
  EXPECT_TRUE(ex.rho_t_linear_part_matches);
  EXPECT_EQ(ex.rho_t_text, "t(x)1 + tz3(x)v + tz2(x)u - tz2z3(x)uv + tz1(x)uv");
  EXPECT_TRUE(ex.subgroups.ok);
  EXPECT_TRUE(ex.subgroups.whole_space_residue_zero);
  ASSERT_EQ(ex.subgroups.families.size(), 5U);
  for (const auto& f : ex.subgroups.families) {
    EXPECT_GT(f.linear_rank, f.max_dim) << f.family;
    EXPECT_TRUE(f.symbolic_nonzero) << f.family;
    EXPECT_TRUE(f.concrete_nonzero) << f.family;
  }
  EXPECT_TRUE(ex.kernel.ok);
  EXPECT_EQ(ex.kernel.coefficient_rank, 3U);
  for (const auto& i : ex.kernel.ideals) {
    EXPECT_TRUE(i.is_hopf_ideal) << i.generator;
    EXPECT_FALSE(i.contains_u && i.contains_v) << i.generator;
    EXPECT_TRUE(i.residue_nonzero) << i.generator;
  }
}

}  // namespace
}  // namespace superlie
