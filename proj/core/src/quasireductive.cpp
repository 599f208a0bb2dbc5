#include "superlie/quasireductive.hpp"

#include "superlie/jordan.hpp"
#include "superlie/structure.hpp"

namespace superlie {

QuasireductiveCertificate is_quasireductive(const LieSuperAlgebra& l) {
  QuasireductiveCertificate c;
  c.even_radical = even_radical(l);
  c.even_center = even_center(l);
  c.radical_is_center = c.even_radical == c.even_center;
  c.center_acts_semisimply = true;
  for (const auto& z : c.even_center.basis()) {
    if (!jordan_chevalley(l.ad(z)).nilpotent.is_zero()) {
      c.center_acts_semisimply = false;
      c.witness = l.format(z);
      break;
    }
  }
  c.quasireductive = c.radical_is_center && c.center_acts_semisimply;
  if (!c.radical_is_center) {
    c.reason = "radical of the even part (dim " + std::to_string(c.even_radical.dim()) +
               ") differs from its center (dim " + std::to_string(c.even_center.dim()) + ")";
  } else if (!c.center_acts_semisimply) {
    c.reason = "central element " + c.witness + " acts with a nonzero nilpotent part";
  } else {
    c.reason = "ok";
  }
  return c;
}

}  // namespace superlie
