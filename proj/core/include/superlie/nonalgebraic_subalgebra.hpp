#pragma once

#include <string>
#include <vector>

#include "superlie/jordan.hpp"
#include "superlie/subspace.hpp"
#include "superlie/tensor_der.hpp"

namespace superlie {

/// H = U + span{id (x) d/dz1, id (x) d/dz2, id (x) delta} inside Der(sl2 (x) Lambda(2)),
/// with delta = (d/dz1)(z1 + z2) + (d/dz2) z2, and the action of id (x) delta on
/// V = sl2 (x) (K z1 + K z2).
struct NonAlgebraicExample {
  TensorDerAlgebra der;
  Subspace h;
  bool h_is_subalgebra = false;
  /// id (x) delta in Der(U) coordinates.
  Vector delta;
  /// Indices into the U basis of h*z1, e*z1, f*z1, h*z2, e*z2, f*z2.
  std::vector<std::size_t> v_basis;
  bool v_invariant_under_h0 = false;
  /// Matrix of id (x) delta on V (column convention).
  RationalMatrix op;
  JordanSplit split;
  /// Span of the images of H_0 in gl(V), flattened.
  Subspace h0_image;
  bool semisimple_in_image = false;
  bool nilpotent_in_image = false;
  /// True when S and N are not both in the image: H is not algebraic.
  bool not_algebraic = false;
};

NonAlgebraicExample build_nonalgebraic_example();

}  // namespace superlie
