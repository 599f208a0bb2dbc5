#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superlie/grassmann.hpp"
#include "superlie/lie_superalgebra.hpp"

namespace superlie {

/// "1" for the empty monomial, otherwise e.g. "z1z3".
std::string monomial_word(std::uint32_t mask, std::size_t generators, const std::string& prefix = "z");

/// Element sum_i x_i (x) a_i of L (x) Lambda(q), one Grassmann coefficient per basis vector.
using TensorElement = std::vector<GrassmannElement>;

/// The Lie superalgebra L (x) Lambda(q) with bracket
/// [x (x) a, y (x) b] = (-1)^{|a||y|} [x,y] (x) ab.
class TensorGrassmann {
 public:
  TensorGrassmann(LieSuperAlgebra l, std::size_t generators);

  const LieSuperAlgebra& algebra() const { return l_; }
  std::size_t generators() const { return q_; }

  TensorElement zero() const;
  /// x (x) a.
  TensorElement pure(const Vector& x, const GrassmannElement& a) const;
  TensorElement pure(std::size_t i, const GrassmannElement& a) const;
  std::optional<Parity> parity(const TensorElement& t) const;

  TensorElement bracket(const TensorElement& a, const TensorElement& b) const;

  /// Basis x_i (x) z^S; the even ones come first, each group ordered by (i, S).
  std::size_t dim() const { return index_.size(); }
  std::size_t basis_index(std::size_t i, std::uint32_t mask) const;
  std::size_t basis_factor(std::size_t b) const { return index_[b].first; }
  std::uint32_t basis_mask(std::size_t b) const { return index_[b].second; }
  Vector coordinates(const TensorElement& t) const;
  TensorElement from_coordinates(const Vector& v) const;

  /// Structure constants on the basis above; labels look like "h*z1z2".
  LieSuperAlgebra materialize() const;

  std::string format(const TensorElement& t) const;

 private:
  LieSuperAlgebra l_;
  std::size_t q_;
  std::vector<std::pair<std::size_t, std::uint32_t>> index_;
  std::vector<std::size_t> position_;  // (i << q) | mask -> basis index
};

}  // namespace superlie
