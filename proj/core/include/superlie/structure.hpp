#pragma once

#include <span>
#include <vector>

#include "superlie/lie_superalgebra.hpp"
#include "superlie/subspace.hpp"

namespace superlie {

/// Graded span of vectors in the coordinates of l.
Subspace span_in(const LieSuperAlgebra& l, std::span<const Vector> vectors);
Subspace whole_of(const LieSuperAlgebra& l);
Subspace zero_of(const LieSuperAlgebra& l);
/// The even part L_0 as a subspace of L.
Subspace even_part(const LieSuperAlgebra& l);

/// [A, B] spanned by brackets of basis vectors.
Subspace bracket_span(const LieSuperAlgebra& l, const Subspace& a, const Subspace& b);
/// {x in within : [x, s] = 0 for all s in s}.
Subspace centralizer(const LieSuperAlgebra& l, const Subspace& s, const Subspace& within);
Subspace centralizer(const LieSuperAlgebra& l, const Subspace& s);
Subspace center(const LieSuperAlgebra& l);
Subspace commutant(const LieSuperAlgebra& l);
/// D_1 = [L,L], D_{k+1} = [D_k, D_k]; D_1 is always listed, later terms up to
/// the first repeat (exclusive).
std::vector<Subspace> derived_series(const LieSuperAlgebra& l);
bool is_solvable(const LieSuperAlgebra& l);

bool is_subalgebra(const LieSuperAlgebra& l, const Subspace& s);
bool is_ideal(const LieSuperAlgebra& l, const Subspace& s);

/// The subalgebra s as a Lie superalgebra on its echelon basis.
LieSuperAlgebra restrict_to(const LieSuperAlgebra& l, const Subspace& s);
/// L / S on the complement coordinates of S; throws PreconditionError when S
/// is not an ideal.
LieSuperAlgebra quotient(const LieSuperAlgebra& l, const Subspace& s);
/// L1 + L2 with basis even(L1), even(L2), odd(L1), odd(L2).
LieSuperAlgebra direct_sum(const LieSuperAlgebra& a, const LieSuperAlgebra& b);

/// Killing form of the even part L_0 acting on itself, in the even coordinates.
RationalMatrix even_killing_form(const LieSuperAlgebra& l);
/// Solvable radical of L_0: the Killing-orthogonal of [L_0, L_0] inside L_0.
Subspace even_radical(const LieSuperAlgebra& l);
/// Center of L_0 as a subspace of L.
Subspace even_center(const LieSuperAlgebra& l);

}  // namespace superlie
