#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "superlie/linalg.hpp"
#include "superlie/parity.hpp"

namespace superlie {

/// Parity-graded subspace of a coordinate superspace K^N whose coordinates
/// carry fixed parities. Every stored basis vector is homogeneous; the basis
/// is kept in reduced row echelon form, so equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace.
  explicit Subspace(std::vector<Parity> coordinate_parity);

  /// Span of `vectors`, each split into its even and odd coordinate parts.
  static Subspace span(std::vector<Parity> coordinate_parity, std::span<const Vector> vectors);
  static Subspace whole(std::vector<Parity> coordinate_parity);

  std::size_t ambient_dim() const { return parity_.size(); }
  std::size_t dim() const { return basis_.size(); }
  std::size_t even_dim() const;
  std::size_t odd_dim() const { return dim() - even_dim(); }
  const std::vector<Parity>& coordinate_parity() const { return parity_; }

  const std::vector<Vector>& basis() const { return basis_; }
  Parity basis_parity(std::size_t i) const { return parity_[pivots_[i]]; }
  std::vector<Vector> basis_of_parity(Parity p) const;

  /// Remainder of v after eliminating the pivot coordinates of the basis.
  /// Zero iff v lies in the subspace; otherwise the remainder is the
  /// canonical representative of v modulo the subspace.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of a member vector with respect to basis().
  Vector coordinates(const Vector& v) const;
  /// Pivot coordinate of each basis row; the remaining coordinates index a complement.
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> complement_coordinates() const;

  Subspace operator+(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.parity_ == b.parity_ && a.basis_ == b.basis_;
  }

 private:
  std::vector<Parity> parity_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Splits v into its restriction to even coordinates and to odd coordinates.
Vector parity_component(const Vector& v, const std::vector<Parity>& coordinate_parity, Parity p);

}  // namespace superlie
