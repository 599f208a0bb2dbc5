#pragma once

#include <string_view>

#include "superlie/linalg.hpp"
#include "superlie/polynomial.hpp"

namespace superlie {

/// M = S + N with S semisimple, N nilpotent and SN = NS.
struct JordanSplit {
  RationalMatrix semisimple;
  RationalMatrix nilpotent;
  /// Polynomial s with s(M) = S.
  Polynomial semisimple_polynomial;
  /// Square-free part of the characteristic polynomial; annihilates S.
  Polynomial square_free;
  std::size_t iterations = 0;
};

/// Exact Jordan-Chevalley decomposition over the rationals.
///
/// With chi the characteristic polynomial and p its square-free part, Newton's
/// iteration x <- x - p(x)/p'(x) runs in Q[x]/(chi) starting from x; the limit
/// s satisfies chi | p(s), and S = s(M). Eigenvalues are never computed, so
/// irrational spectra are handled exactly. All defining properties are
/// checked before returning.
JordanSplit jordan_chevalley(const RationalMatrix& m);

enum class AlgebraicityVerdict { NotAlgebraic, SemisimpleCase, NilpotentCase };

std::string_view to_string(AlgebraicityVerdict v);

/// Mixed-type test for the line spanned by M. NotAlgebraic iff both Jordan
/// parts are nonzero; the pure cases carry no claim about algebraicity.
/// Throws PreconditionError on the zero matrix.
AlgebraicityVerdict one_dim_algebraicity(const RationalMatrix& m);

}  // namespace superlie
