#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "superlie/dual_numbers.hpp"
#include "superlie/grassmann.hpp"
#include "superlie/jordan.hpp"
#include "superlie/lie_superalgebra.hpp"
#include "superlie/supermatrix.hpp"

namespace superlie {

/// A point (A|B) of the subgroup L of GL(2|2) consisting of the matrices
///   [ A B ]
///   [ B A ]
/// with A = [[a1, a2], [0, a1]] and B = [[t, (1 + a1^{-1} a2) t], [0, t]],
/// a1 an even unit, a2 even and t odd.
class QueerPoint {
 public:
  /// Throws ParityError or NotAUnitError when the data do not define a point.
  QueerPoint(GrassmannElement a1, GrassmannElement a2, GrassmannElement t);

  static QueerPoint identity(std::size_t generators);
  /// Reads a 4x4 supermatrix back; throws PreconditionError off the subgroup.
  static QueerPoint from_matrix(const SuperMatrix& m);

  const GrassmannElement& a1() const { return a1_; }
  const GrassmannElement& a2() const { return a2_; }
  const GrassmannElement& t() const { return t_; }
  std::size_t generators() const { return a1_.generators(); }

  /// The 2x2 blocks, stored as SuperMatrix(2, 0, q).
  SuperMatrix block_a() const;
  SuperMatrix block_b() const;
  SuperMatrix matrix() const;

  friend bool operator==(const QueerPoint& x, const QueerPoint& y) = default;

 private:
  GrassmannElement a1_;
  GrassmannElement a2_;
  GrassmannElement t_;
};

/// (A|B)(A'|B') = (AA' + BB' | AB' + BA'). Throws Error if the block formula
/// disagrees with 4x4 multiplication or leaves the subgroup.
QueerPoint queer_multiply(const QueerPoint& p, const QueerPoint& q);
/// (A|B)^{-1} = (A^{-1} | -A^{-2} B), cross-checked against 4x4 inversion.
QueerPoint queer_inverse(const QueerPoint& p);
/// The closed form (E + 2 A^{-1} A'^{-1} B B' | 0) of p q p^{-1} q^{-1}.
QueerPoint queer_commutator(const QueerPoint& p, const QueerPoint& q);

/// Checks of the group law on one pair of points.
struct QueerPairCheck {
  bool product_closed = false;
  bool product_matches_matrix = false;
  bool inverse_matches_matrix = false;
  bool commutator_matches = false;
  bool ok() const { return product_closed && product_matches_matrix && inverse_matches_matrix && commutator_matches; }
};

QueerPairCheck check_queer_pair(const QueerPoint& p, const QueerPoint& q);

/// Seeded random point over Lambda(q).
QueerPoint random_queer_point(std::size_t generators, std::mt19937_64& rng);

/// Whether a point over the dual numbers lies in L(K[e0, e1]).
bool in_queer_subgroup(const DualNumberPoint& p);

/// The Lie superalgebra of L spanned by x = (E|0), y = (E12|0), v = (0|E+E12).
struct QueerLieReport {
  SuperMatrix x;
  SuperMatrix y;
  SuperMatrix v;
  SuperMatrix xy;
  SuperMatrix xv;
  SuperMatrix yv;
  SuperMatrix vv;
  bool relations_vanish = false;
  bool vv_is_2x_plus_4y = false;
  bool x_tangent = false;
  bool y_tangent = false;
  bool v_tangent = false;
  /// a = [v, v] acting on the even part of the natural module.
  RationalMatrix a_even;
  JordanSplit split;
  AlgebraicityVerdict verdict = AlgebraicityVerdict::NotAlgebraic;
  bool ok() const {
    return relations_vanish && vv_is_2x_plus_4y && x_tangent && y_tangent && v_tangent &&
           verdict == AlgebraicityVerdict::NotAlgebraic;
  }
};

QueerLieReport queer_lie();

/// x, y even and v odd with [v, v] = 2x + 4y and all other brackets zero.
LieSuperAlgebra make_queer_commutant_algebra();

struct CommutantCounterexample {
  QueerLieReport lie;
  std::size_t pairs = 0;
  std::size_t pairs_ok = 0;
  std::size_t generators = 0;
  std::uint64_t seed = 0;
  bool ok() const { return lie.ok() && pairs > 0 && pairs_ok == pairs; }
};

CommutantCounterexample run_commutant_counterexample(std::size_t pairs, std::size_t generators, std::uint64_t seed);

}  // namespace superlie
