#include "superlie/subspace.hpp"

#include "superlie/errors.hpp"

namespace superlie {

Vector parity_component(const Vector& v, const std::vector<Parity>& coordinate_parity, Parity p) {
  if (v.size() != coordinate_parity.size()) throw DimensionError("vector does not match the ambient superspace");
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (coordinate_parity[i] == p) out[i] = v[i];
  }
  return out;
}

Subspace::Subspace(std::vector<Parity> coordinate_parity) : parity_(std::move(coordinate_parity)) {}

Subspace Subspace::span(std::vector<Parity> coordinate_parity, std::span<const Vector> vectors) {
  Subspace s(std::move(coordinate_parity));
  std::vector<Vector> rows;
  rows.reserve(2 * vectors.size());
  for (const auto& v : vectors) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      Vector part = parity_component(v, s.parity_, p);
      if (!is_zero(part)) rows.push_back(std::move(part));
    }
  }
  if (rows.empty()) return s;
  // The row space of homogeneous rows is graded, so its reduced echelon
  // basis consists of homogeneous vectors.
  const RowEchelon e = rref(RationalMatrix::from_rows(rows, s.ambient_dim()));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.matrix.row(r));
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::whole(std::vector<Parity> coordinate_parity) {
  const std::size_t n = coordinate_parity.size();
  std::vector<Vector> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vector(n, i));
  return span(std::move(coordinate_parity), units);
}

std::size_t Subspace::even_dim() const {
  std::size_t count = 0;
  for (auto p : pivots_) count += parity_[p] == Parity::Even ? 1 : 0;
  return count;
}

std::vector<Vector> Subspace::basis_of_parity(Parity p) const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_parity(i) == p) out.push_back(basis_[i]);
  }
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim()) throw DimensionError("vector does not match the ambient superspace");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (sgn(c) != 0) axpy(-c, basis_[i], r);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw PreconditionError("vector is not in the subspace");
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<std::size_t> Subspace::complement_coordinates() const {
  std::vector<bool> pivot(ambient_dim(), false);
  for (auto p : pivots_) pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_dim(); ++i) {
    if (!pivot[i]) out.push_back(i);
  }
  return out;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.parity_ != parity_) throw DimensionError("subspaces live in different superspaces");
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(parity_, all);
}

}  // namespace superlie
