#pragma once

#include <string>

#include "superlie/lie_superalgebra.hpp"
#include "superlie/subspace.hpp"

namespace superlie {

/// Outcome of the quasireductivity test together with the data it rests on.
struct QuasireductiveCertificate {
  bool quasireductive = false;
  Subspace even_radical;
  Subspace even_center;
  /// Condition (a): the radical of L_0 equals the center of L_0.
  bool radical_is_center = false;
  /// Condition (b): every central basis vector of L_0 acts semisimply on L.
  bool center_acts_semisimply = false;
  /// Central element whose ad has a nonzero nilpotent part, when (b) fails.
  std::string witness;
  /// Names the failing condition, or "ok".
  std::string reason;
};

/// L is quasireductive when L_0 is reductive and L is a semisimple L_0-module.
/// Tested as (a) rad(L_0) = Z(L_0) and (b) ad z is semisimple on L for each
/// basis vector z of Z(L_0).
QuasireductiveCertificate is_quasireductive(const LieSuperAlgebra& l);

}  // namespace superlie
