#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "superlie/grassmann.hpp"
#include "superlie/lie_superalgebra.hpp"

namespace superlie {

/// Right partial derivative: (z^S)d_i = (-1)^{#generators of S after i} z^{S-i}.
GrassmannElement right_partial(const GrassmannElement& a, std::size_t i);

/// Right superderivation sum_i (d/dz_i) f_i of Lambda(n), acting by
/// (a)delta = sum_i ((a)d_i) f_i.
class GrassmannDerivation {
 public:
  explicit GrassmannDerivation(std::vector<GrassmannElement> components);
  /// (d/dz_i) z^mask on n generators.
  static GrassmannDerivation basis(std::size_t generators, std::size_t i, std::uint32_t mask);

  std::size_t generators() const { return f_.size(); }
  const std::vector<GrassmannElement>& components() const { return f_; }
  /// Parity |f_i| + 1; throws ParityError when the components disagree.
  Parity parity() const;
  bool is_zero() const;

  GrassmannElement apply(const GrassmannElement& a) const;

  friend bool operator==(const GrassmannDerivation& a, const GrassmannDerivation& b) = default;

 private:
  std::vector<GrassmannElement> f_;
};

/// [d, d'] = d d' - (-1)^{|d||d'|} d' d with d applied first. Its components
/// are g_i = (f_i)d' - (-1)^{|d||d'|}(f'_i)d, read off on the generators.
GrassmannDerivation bracket(const GrassmannDerivation& a, const GrassmannDerivation& b);

/// Der(Lambda(n)) on the basis (d/dz_i) z^S, with the Z-grading deg = |S| - 1.
struct GrassmannDerivationAlgebra {
  std::size_t generators = 0;
  LieSuperAlgebra algebra;
  /// Per basis vector: generator index i and monomial S.
  std::vector<std::pair<std::size_t, std::uint32_t>> basis;
  std::vector<int> degree;

  std::size_t index_of(std::size_t i, std::uint32_t mask) const;
  GrassmannDerivation derivation(std::size_t b) const;
  /// Coordinates of a derivation in this basis.
  Vector coordinates(const GrassmannDerivation& d) const;
};

/// Labels look like "d1*z2" for (d/dz_1) z_2 and "d1*1" for d/dz_1.
GrassmannDerivationAlgebra grassmann_derivations(std::size_t n);

}  // namespace superlie
