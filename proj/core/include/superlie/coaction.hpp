#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superlie/hopf_abelian.hpp"

namespace superlie {

/// Data determining a coaction rho*: K[X] -> K[X] (x) K[G] of G on an abelian X:
/// the matrix f_ij on the primitive generators and, per torus generator t_a,
/// the values f_i(t_a) of the character-to-nilpotent homomorphisms.
struct CoactionData {
  AbelianHopfAlgebra x;
  AbelianHopfAlgebra g;
  /// f[i][j] = f_ij, square of size l + k of X.
  std::vector<std::vector<HopfElement>> f;
  /// characters[a][i] = f_i(t_a).
  std::vector<std::vector<HopfElement>> characters;
};

/// rho*(z_i) = sum_j z_j (x) f_ji and rho*(g) = (g (x) 1) exp(sum_i z_i (x) f_i(g)),
/// the exponential taken in K[X] (x) K[G] with Koszul signs; extended
/// multiplicatively. For the even elements z_i (x) f_i(g) the exponential
/// expands to sum_lambda z^lambda (x) f^(lambda)(g) up to reordering signs.
class Coaction {
 public:
  /// Throws PreconditionError when some f_i(t_a) is not nilpotent or the
  /// shapes of the data are inconsistent.
  explicit Coaction(CoactionData data);

  const CoactionData& data() const { return data_; }
  HopfTensor apply(const Monomial& m) const;
  HopfTensor apply(const HopfElement& a) const;
  /// f_i(g) for a character g in Z^r, by additivity.
  HopfElement character_value(std::size_t i, const std::vector<std::int64_t>& g) const;

 private:
  HopfTensor apply_grouplike(const std::vector<std::int64_t>& g) const;
  HopfTensor embed_left(const HopfElement& a) const;

  CoactionData data_;
  std::vector<HopfTensor> primitive_images_;
};

struct CoactionReport {
  bool f_parities = true;
  bool f_comatrix = true;        ///< Delta(f_ij) = sum_t f_it (x) f_tj, eps(f_ij) = delta_ij
  bool characters_nilpotent = true;
  /// Even f_i(g) built from products of odd elements; reported, not enforced.
  bool characters_in_odd_square = true;
  bool comodule_coassociative = true;   ///< (i)
  bool counit = true;                   ///< (ii)
  bool compatibility = true;            ///< (iii)
  bool algebra_morphism = true;         ///< (iv)
  std::vector<std::string> failures;
  std::size_t checks = 0;

  bool ok() const {
    return f_parities && f_comatrix && characters_nilpotent && comodule_coassociative && counit && compatibility &&
           algebra_morphism;
  }
};

/// Verifies the comodule axioms and the compatibility condition
///   Delta_G(f_i(g)) = f_i(g) (x) 1 + sum_j f_ij (x) f_j(g)
/// for every i and torus generator g, and the algebra-morphism property on
/// products of basis monomials of total degree <= d.
CoactionReport verify_coaction(const CoactionData& data, std::size_t d);

/// Comodule coassociativity (rho* (x) id) rho* = (id (x) Delta_G) rho* on one element.
bool comodule_coassociative_on(const Coaction& rho, const HopfElement& a);

}  // namespace superlie
