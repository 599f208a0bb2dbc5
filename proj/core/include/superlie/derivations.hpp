#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "superlie/lie_superalgebra.hpp"
#include "superlie/subspace.hpp"

namespace superlie {

/// Homogeneous linear operator acting on the right of a Lie superalgebra.
/// Column j of `matrix` holds the coordinates of (x_j)delta.
struct SuperDerivation {
  Parity parity = Parity::Even;
  RationalMatrix matrix;
};

/// Checks ([x,y])d = [x,(y)d] + (-1)^{|d||y|}[(x)d,y] on all basis pairs,
/// together with parity homogeneity of the operator.
bool is_derivation(const LieSuperAlgebra& l, const SuperDerivation& d);

/// Bracket of right operators [d, d'] = d d' - (-1)^{|d||d'|} d' d, where
/// d d' applies d first; as matrices this is M' M - sign * M M'.
SuperDerivation operator_bracket(const SuperDerivation& a, const SuperDerivation& b);

/// Parity of each entry of a row-major flattened operator on l.
std::vector<Parity> operator_coordinate_parity(const LieSuperAlgebra& l);
/// Graded span of operators inside gl(l), in flattened coordinates.
Subspace operator_span(const LieSuperAlgebra& l, std::span<const SuperDerivation> ops);

struct DerivationSpace {
  std::vector<SuperDerivation> even;
  std::vector<SuperDerivation> odd;

  std::size_t dim() const { return even.size() + odd.size(); }
  std::vector<SuperDerivation> all() const;
};

/// Der(L) as the null space of the Leibniz system over all basis pairs,
/// solved once per parity.
DerivationSpace derivation_space(const LieSuperAlgebra& l);

/// ad(x_i) for every basis vector, as derivations of parity |x_i|.
std::vector<SuperDerivation> inner_derivations(const LieSuperAlgebra& l);
Subspace inner_derivation_span(const LieSuperAlgebra& l);
/// (even, odd) dimensions of Der(L) / ad(L).
std::pair<std::size_t, std::size_t> outer_quotient_dim(const LieSuperAlgebra& l);

/// Der(L) as a Lie superalgebra on the echelon basis of derivation_space,
/// with the operators in the same order.
struct DerivationAlgebra {
  LieSuperAlgebra algebra;
  std::vector<SuperDerivation> basis;
  Subspace span;
};
DerivationAlgebra derivation_algebra(const LieSuperAlgebra& l);

}  // namespace superlie
