#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superlie/parity.hpp"
#include "superlie/scalar.hpp"

namespace superlie {

/// Largest Grassmann generator count accepted by GrassmannElement. Defaults
/// to 8 and can be overridden with SUPERLIE_GENERATOR_BUDGET (read once).
std::size_t generator_budget();

/// Hard limit imposed by the bitmask monomial encoding.
inline constexpr std::size_t kMaxGenerators = 31;

/// Sign of z^a z^b rewritten as z^{a|b} for sorted subsets encoded as bitmasks:
/// (-1)^{#inversions}, or 0 when the subsets overlap.
int merge_sign(std::uint32_t a, std::uint32_t b);

/// Element of the Grassmann algebra on q odd generators, stored as a sparse
/// map from sorted subsets (bitmasks, bit i = generator i+1) to coefficients.
/// Zero coefficients are never stored, so equality is structural.
class GrassmannElement {
 public:
  using Mask = std::uint32_t;
  using Terms = std::map<Mask, Scalar>;

  explicit GrassmannElement(std::size_t generators = 0);

  static GrassmannElement zero(std::size_t generators) { return GrassmannElement(generators); }
  static GrassmannElement one(std::size_t generators) { return constant(generators, Scalar(1)); }
  static GrassmannElement constant(std::size_t generators, const Scalar& value);
  /// The generator with 0-based index `index`.
  static GrassmannElement generator(std::size_t generators, std::size_t index);
  static GrassmannElement monomial(std::size_t generators, Mask mask, const Scalar& coefficient = Scalar(1));

  std::size_t generators() const { return generators_; }
  const Terms& terms() const { return terms_; }

  Scalar coefficient(Mask mask) const;
  /// Coefficient of the empty monomial.
  Scalar body() const { return coefficient(0); }

  bool is_zero() const { return terms_.empty(); }
  /// Zero counts as both even and odd.
  bool is_even() const;
  bool is_odd() const;
  bool is_homogeneous() const { return is_even() || is_odd(); }
  /// Parity of a homogeneous element; nullopt for mixed elements. Zero is even.
  std::optional<Parity> parity() const;

  GrassmannElement part(Parity p) const;
  GrassmannElement even_part() const { return part(Parity::Even); }
  GrassmannElement odd_part() const { return part(Parity::Odd); }
  /// Components of fixed monomial degree.
  GrassmannElement degree_part(std::size_t degree) const;

  /// Inverse of an even element with nonzero body, via the terminating
  /// geometric series c^{-1} sum_k (1 - a/c)^k.
  GrassmannElement inverse() const;

  /// Re-embeds into an algebra with more generators.
  GrassmannElement extended(std::size_t generators) const;

  GrassmannElement& operator+=(const GrassmannElement& other);
  GrassmannElement& operator-=(const GrassmannElement& other);
  GrassmannElement& operator*=(const Scalar& factor);

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(GrassmannElement a, const Scalar& s) { return a *= s; }
  friend GrassmannElement operator*(const Scalar& s, GrassmannElement a) { return a *= s; }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  GrassmannElement operator-() const;

  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.generators_ == b.generators_ && a.terms_ == b.terms_;
  }

  /// Renders e.g. "1/2 - 1/4*e1e2"; `names` overrides the generator names.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(Mask mask, const Scalar& coefficient);
  void check_same_algebra(const GrassmannElement& other) const;

  std::size_t generators_ = 0;
  Terms terms_;
};

GrassmannElement grassmann_mul(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement grassmann_inverse(const GrassmannElement& a);

/// Parity of the monomial encoded by a bitmask.
inline Parity mask_parity(std::uint32_t mask) {
  return parity_of(static_cast<std::uint64_t>(__builtin_popcount(mask)));
}

}  // namespace superlie
