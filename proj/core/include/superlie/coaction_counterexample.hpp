#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "superlie/coaction.hpp"
#include "superlie/hopf_abelian.hpp"

namespace superlie {

/// G = Lambda(u, v) with u, v odd primitive, acting on X with (r, l, k) = (1, 1, 2)
/// through f_1 = uv, f_2 = u, f_3 = v and the matrix
///   [ 1  -v  u ]
///   [ 0   1  0 ]
///   [ 0   0  1 ].
CoactionData coaction_counterexample_data();

/// One family of graded subspaces V of W = span{z1, z2, z3}.
struct SubspaceFamilyCheck {
  std::string family;
  /// Largest dimension of a member of the family.
  std::size_t max_dim = 0;
  bool parametrized = false;
  /// Linear parts of the K[G]-coefficients of rho*(t) - t (x) 1 span a space
  /// of this dimension; exceeding max_dim proves the residue is nonzero for
  /// every member.
  std::size_t linear_rank = 0;
  bool symbolic_nonzero = false;
  std::vector<std::string> directions;
  bool concrete_nonzero = false;
};

/// Every proper graded V gives a nonzero residue of rho*(t) - t (x) 1 modulo
/// I_V (x) K[G]; for V = W the residue vanishes.
struct SubgroupExclusionReport {
  std::vector<SubspaceFamilyCheck> families;
  bool whole_space_residue_zero = false;
  bool ok = false;
};

/// A Hopf ideal of K[G] generated by an odd primitive line.
struct HopfIdealCheck {
  std::string generator;
  bool is_hopf_ideal = false;
  bool contains_u = false;
  bool contains_v = false;
  bool contains_uv = false;
  /// rho*(t) - t (x) 1 stays nonzero modulo K[X] (x) I.
  bool residue_nonzero = false;
};

/// No proper quotient of G acts trivially: u, v, uv never all lie in a
/// proper Hopf ideal, and {uv, u, v} is linearly independent.
struct TrivialKernelReport {
  std::size_t coefficient_rank = 0;
  std::vector<HopfIdealCheck> ideals;
  bool ok = false;
};

struct CoactionCounterexample {
  CoactionData data;
  CoactionReport axioms;
  HopfTensor rho_t;
  std::string rho_t_text;
  /// The part of rho*(t) of z-degree <= 1 equals t (x) 1 + tz1 (x) uv + tz2 (x) u + tz3 (x) v.
  bool rho_t_linear_part_matches = false;
  SubgroupExclusionReport subgroups;
  TrivialKernelReport kernel;
  bool ok = false;
};

CoactionCounterexample run_coaction_counterexample(std::size_t truncation = 4);

}  // namespace superlie
