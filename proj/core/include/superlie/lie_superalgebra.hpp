#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superlie/linalg.hpp"
#include "superlie/parity.hpp"
#include "superlie/scalar.hpp"

namespace superlie {

/// Lie superalgebra of superdimension (m|n) presented by structure constants
/// [x_i, x_j] = sum_k c_ijk x_k. The first m basis vectors are even.
/// Indices are 0-based throughout the API.
class LieSuperAlgebra {
 public:
  LieSuperAlgebra() = default;
  LieSuperAlgebra(std::size_t even_dim, std::size_t odd_dim, std::vector<std::string> labels = {},
                  std::string name = {});

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::size_t dim() const { return m_ + n_; }
  std::size_t even_dim() const { return m_; }
  std::size_t odd_dim() const { return n_; }
  Parity parity(std::size_t i) const { return i < m_ ? Parity::Even : Parity::Odd; }
  std::vector<Parity> coordinate_parity() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Sets [x_i, x_j] = value without touching [x_j, x_i].
  void set_bracket(std::size_t i, std::size_t j, Vector value);
  /// Sets [x_i, x_j] = value and [x_j, x_i] = -(-1)^{|x_i||x_j|} value.
  void set_antisymmetric(std::size_t i, std::size_t j, const Vector& value);
  void set_structure_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// [x_i, x_j] in coordinates (a zero vector when unset).
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  bool has_bracket(std::size_t i, std::size_t j) const { return !table_[i * dim() + j].empty(); }

  /// Bilinear bracket of coordinate vectors.
  Vector bracket(const Vector& v, const Vector& w) const;
  bool is_abelian() const;

  /// Matrix of the right operator y -> [y, x]: column j holds [x_j, x].
  RationalMatrix ad(const Vector& x) const;
  RationalMatrix ad_basis(std::size_t i) const { return ad(unit_vector(dim(), i)); }

  Vector zero_vector() const { return Vector(dim()); }
  /// "2*h + e" style rendering using the basis labels.
  std::string format(const Vector& v) const;

  friend bool operator==(const LieSuperAlgebra& a, const LieSuperAlgebra& b);

 private:
  void check_index(std::size_t i) const;
  void check_vector(const Vector& v) const;

  std::string name_;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Vector> table_;  // row-major (i, j); empty means zero
};

enum class ViolationKind { Homogeneity, Antisymmetry, Jacobi };

std::string_view to_string(ViolationKind kind);

struct ValidationReport {
  bool valid = true;
  std::optional<ViolationKind> kind;
  /// Basis indices of the first violation (k unused for antisymmetry).
  std::size_t i = 0, j = 0, k = 0;
  std::string message;
};

/// Checks parity homogeneity of the constants, super antisymmetry and the
/// super Jacobi identity [[x,y],z] = [x,[y,z]] + (-1)^{|y||z|}[[x,z],y] on all
/// basis triples, reporting the first violation in that order.
ValidationReport validate(const LieSuperAlgebra& l);

/// gl(m|n) on elementary matrices E_ij: even ones first, each group row-major.
LieSuperAlgebra make_gl(std::size_t m, std::size_t n);
/// sl2 on h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieSuperAlgebra make_sl2();
LieSuperAlgebra make_abelian(std::size_t even_dim, std::size_t odd_dim);
/// The purely even algebra on h, e with [h,e] = e.
LieSuperAlgebra make_nonabelian2();

}  // namespace superlie
