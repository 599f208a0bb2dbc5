#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superlie/derivations.hpp"
#include "superlie/grassmann_derivations.hpp"
#include "superlie/lie_superalgebra.hpp"
#include "superlie/subspace.hpp"
#include "superlie/tensor_grassmann.hpp"

namespace superlie {

/// One summand U_i (x) Lambda(n_i) of U.
struct TensorDerSummand {
  LieSuperAlgebra algebra;
  std::size_t generators = 0;
};

enum class TensorDerSector {
  /// delta (x) z^S with delta in Der(U_i)
  DerTensor,
  /// id (x) (d/dz_j) z^S
  IdTensor,
};

struct TensorDerBasisVector {
  std::size_t summand = 0;
  TensorDerSector sector = TensorDerSector::DerTensor;
  /// Index into the Der(U_i) basis, or the generator j for IdTensor.
  std::size_t index = 0;
  std::uint32_t mask = 0;
  Parity parity = Parity::Even;
  std::string label;
};

/// Der(U) for U = sum_i U_i (x) Lambda(n_i), assembled from the bracket formulas
///   [d (x) a, d' (x) a'] = (-1)^{|a||d'|} [d,d'] (x) aa'
///   [d (x) a, id (x) D]  = d (x) (a)D
///   [id (x) D, id (x) D'] = id (x) [D,D']
/// The Der(U_i) basis starts with independent ad(x_k) (labelled "ad(x_k)"),
/// extended by outer derivations ("out1", ...). Basis labels look like
/// "ad(h)*z1z2" and "id*d1*z2".
class TensorDerAlgebra {
 public:
  explicit TensorDerAlgebra(std::vector<TensorDerSummand> summands);

  const std::vector<TensorDerSummand>& summands() const { return summands_; }
  const LieSuperAlgebra& algebra() const { return algebra_; }
  const std::vector<TensorDerBasisVector>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const std::string& label) const { return algebra_.index_of(label); }

  /// Der(U_i) basis operators acting on U_i.
  const std::vector<SuperDerivation>& summand_derivations(std::size_t i) const { return der_[i]; }
  const std::vector<std::string>& summand_derivation_labels(std::size_t i) const { return der_labels_[i]; }

  /// U itself, materialized with basis x (x) z^S (even first, summands in order).
  const LieSuperAlgebra& inner_algebra() const { return u_; }
  /// The copy of U inside Der(U): span of ad(x_k) (x) z^S.
  const Subspace& inner_ideal() const { return inner_; }
  /// ad(u) (x) z^S in Der(U) coordinates for each basis vector of U, in U order.
  const std::vector<Vector>& inner_vectors() const { return inner_vectors_; }
  /// Basis index of ad(x_k) (x) z^S for every basis vector of U, in U order;
  /// nullopt when ad(x_k) is not a Der(U_i) basis vector (central directions).
  std::vector<std::optional<std::size_t>> inner_basis_indices() const;

  /// Matrix of a basis vector acting on the right of U, realized by
  ///   (x (x) b)(d (x) a) = (-1)^{|b||d|} (x)d (x) ba,   (x (x) b)(id (x) D) = x (x) (b)D.
  SuperDerivation realize(std::size_t b) const;
  SuperDerivation realize(const Vector& v) const;
  /// Position of x_k (x) z^S of summand i in the coordinates of U.
  std::size_t u_index(std::size_t summand, std::size_t k, std::uint32_t mask) const;

  /// Basis indices of id (x) d/dz_j for summand i, j = 1..n_i.
  std::vector<std::size_t> degree_minus_one(std::size_t summand) const;

  /// Summands with a nonzero center, where ad is not injective.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::vector<TensorDerSummand> summands_;
  std::vector<std::vector<SuperDerivation>> der_;
  std::vector<std::vector<std::string>> der_labels_;
  std::vector<std::vector<Vector>> ad_coordinates_;  // ad(x_k) in the Der(U_i) basis
  std::vector<std::vector<std::size_t>> der_order_;   // x_k -> Der(U_i) index of ad(x_k), or size()
  std::vector<GrassmannDerivationAlgebra> sym_;
  std::vector<TensorGrassmann> tensors_;
  std::vector<TensorDerBasisVector> basis_;
  LieSuperAlgebra algebra_;
  LieSuperAlgebra u_;
  std::vector<std::vector<std::size_t>> u_pos_;  // per summand: tensor basis index -> U index
  std::vector<std::optional<std::size_t>> inner_indices_;
  std::vector<Vector> inner_vectors_;
  Subspace inner_;
  std::vector<std::string> warnings_;
};

TensorDerAlgebra tensor_der(std::vector<TensorDerSummand> summands);

/// Outcome of the projection criterion for semisimplicity.
struct KacReport {
  bool semisimple = true;
  /// Rank of the projection of H to the degree -1 sector, per summand.
  std::vector<std::size_t> projection_rank;
  std::vector<std::size_t> required_rank;
};

/// For H containing the inner ideal U: semisimple iff for every summand the
/// projection of H to id (x) Der(Lambda(n_i))_{-1} is onto. Throws
/// PreconditionError naming the first inner basis vector missing from H.
KacReport kac_semisimple_check(const TensorDerAlgebra& der, const Subspace& h);

}  // namespace superlie
