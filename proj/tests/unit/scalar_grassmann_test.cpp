#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <vector>

#include "superlie/errors.hpp"
#include "superlie/grassmann.hpp"
#include "superlie/random.hpp"
#include "superlie/scalar.hpp"

namespace superlie {
namespace {

using G = GrassmannElement;

// Oracle: multiply monomials as generator words and bubble-sort them,
// counting transpositions. Independent of the bitmask inversion count.
std::map<std::vector<int>, Scalar> word_product(const G& a, const G& b) {
  std::map<std::vector<int>, Scalar> out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> word;
      for (int i = 0; i < 32; ++i) {
        if (ma & (1U << i)) word.push_back(i);
      }
      for (int i = 0; i < 32; ++i) {
        if (mb & (1U << i)) word.push_back(i);
      }
      int sign = 1;
      bool repeated = false;
      for (std::size_t pass = 0; pass < word.size(); ++pass) {
        for (std::size_t k = 0; k + 1 < word.size(); ++k) {
          if (word[k] == word[k + 1]) repeated = true;
          if (word[k] > word[k + 1]) {
            std::swap(word[k], word[k + 1]);
            sign = -sign;
          }
        }
      }
      if (repeated) continue;
      out[word] += sign * ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

std::map<std::vector<int>, Scalar> as_words(const G& a) {
  std::map<std::vector<int>, Scalar> out;
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> word;
    for (int i = 0; i < 32; ++i) {
      if (m & (1U << i)) word.push_back(i);
    }
    out[word] = c;
  }
  return out;
}

Parity random_parity(std::mt19937_64& rng) { return (rng() & 1U) ? Parity::Odd : Parity::Even; }

TEST(Scalar, ParsesCanonicalRationals) {
  EXPECT_EQ(parse_scalar("3/6"), make_scalar(1, 2));
  EXPECT_EQ(parse_scalar("-4"), Scalar(-4));
  EXPECT_EQ(parse_scalar("+7/14"), make_scalar(1, 2));
  EXPECT_EQ(to_string(make_scalar(-6, 4)), "-3/2");
}

TEST(Scalar, RejectsMalformedLiterals) {
  EXPECT_THROW(parse_scalar("0.5"), ParseError);
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar("1/-2"), ParseError);
  EXPECT_THROW(parse_scalar(""), ParseError);
}

TEST(Grassmann, MergeSign) {
  EXPECT_EQ(merge_sign(0b01, 0b10), 1);
  EXPECT_EQ(merge_sign(0b10, 0b01), -1);
  EXPECT_EQ(merge_sign(0b11, 0b01), 0);
  // z2z3 * z1 = z1z2z3 after two transpositions.
  EXPECT_EQ(merge_sign(0b110, 0b001), 1);
  // z3 * z1z2 = z1z2z3, again two transpositions.
  EXPECT_EQ(merge_sign(0b100, 0b011), 1);
  EXPECT_EQ(merge_sign(0b010, 0b101), -1);
}

TEST(Grassmann, GeneratorsAnticommuteAndSquareToZero) {
  const G e1 = G::generator(3, 0);
  const G e2 = G::generator(3, 1);
  EXPECT_EQ(e1 * e2, -(e2 * e1));
  EXPECT_TRUE((e1 * e1).is_zero());
  EXPECT_EQ((e1 * e2).to_string(), "e1e2");
  EXPECT_EQ((e2 * e1).to_string(), "-e1e2");
}

TEST(Grassmann, ToStringAndParity) {
  const G a = G::constant(2, make_scalar(1, 2)) - G::monomial(2, 0b11, make_scalar(1, 4));
  EXPECT_EQ(a.to_string(), "1/2 - 1/4*e1e2");
  EXPECT_EQ(a.to_string({"u", "v"}), "1/2 - 1/4*uv");
  EXPECT_EQ(a.parity(), Parity::Even);
  const G mixed = a + G::generator(2, 0);
  EXPECT_FALSE(mixed.parity().has_value());
  EXPECT_EQ(mixed.odd_part(), G::generator(2, 0));
  EXPECT_EQ(G::zero(2).parity(), Parity::Even);
}

TEST(Grassmann, InverseOfNilpotentPerturbation) {
  // (2 + e1e2)^{-1} = 1/2 - 1/4 e1e2
  const G a = G::constant(2, 2) + G::monomial(2, 0b11);
  EXPECT_EQ(a.inverse().to_string(), "1/2 - 1/4*e1e2");
}

TEST(Grassmann, InverseErrors) {
  EXPECT_THROW(G::generator(2, 0).inverse(), NotAUnitError);
  EXPECT_THROW((G::one(2) + G::generator(2, 0)).inverse(), ParityError);
  EXPECT_THROW(G::monomial(2, 0b11).inverse(), NotAUnitError);
}

TEST(Grassmann, DimensionChecks) {
  EXPECT_THROW(G::generator(2, 2), DimensionError);
  EXPECT_THROW(G::monomial(2, 0b100), DimensionError);
  EXPECT_THROW(G::one(2) + G::one(3), DimensionError);
  EXPECT_EQ(G::generator(2, 1).extended(4), G::generator(4, 1));
  EXPECT_THROW(G::one(3).extended(2), DimensionError);
}

TEST(Grassmann, GeneratorBudget) {
  if (std::getenv("SUPERLIE_GENERATOR_BUDGET") != nullptr) GTEST_SKIP() << "budget overridden";
  ASSERT_EQ(generator_budget(), 8U);
  EXPECT_NO_THROW(G(8));
  EXPECT_THROW(G(9), BudgetError);
  EXPECT_THROW(G(32), BudgetError);
}

TEST(GrassmannProperty, ProductMatchesWordOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t q = 1 + rng() % 6;
    const G a = random_grassmann(q, random_parity(rng), rng) + random_grassmann(q, random_parity(rng), rng);
    const G b = random_grassmann(q, random_parity(rng), rng) + random_grassmann(q, random_parity(rng), rng);
    ASSERT_EQ(as_words(a * b), word_product(a, b)) << a.to_string() << " * " << b.to_string();
  }
}

TEST(GrassmannProperty, RingAxiomsAndSupercommutativity) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t q = 1 + rng() % 6;
    const Parity pa = random_parity(rng);
    const Parity pb = random_parity(rng);
    const G a = random_grassmann(q, pa, rng);
    const G b = random_grassmann(q, pb, rng);
    const G c = random_grassmann(q, random_parity(rng), rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, Scalar(koszul_sign(pa, pb)) * (b * a));
    if (pa == Parity::Odd) ASSERT_TRUE((a * a).is_zero());
    if (!(a * b).is_zero()) ASSERT_EQ((a * b).parity(), pa + pb);
  }
}

TEST(GrassmannProperty, InverseOfRandomUnits) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t q = rng() % 7;
    const G a = random_grassmann_unit(q, rng);
    const G inv = a.inverse();
    ASSERT_EQ(a * inv, G::one(q));
    ASSERT_EQ(inv * a, G::one(q));
    ASSERT_EQ(grassmann_inverse(inv), a);
  }
}

}  // namespace
}  // namespace superlie
