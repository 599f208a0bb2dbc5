#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superlie/grassmann.hpp"
#include "superlie/linalg.hpp"

namespace superlie {

/// (m+n)x(m+n) matrix with entries in the Grassmann algebra on q generators,
/// block-structured as gl(m|n). Scalar matrices are the q = 0 case.
///
/// Entry (i,j) sits in a block of parity |i|+|j|, where rows/columns below m
/// are even. A matrix is homogeneous of parity p when every entry (i,j) is a
/// homogeneous Grassmann element of parity p + |i| + |j|.
class SuperMatrix {
 public:
  SuperMatrix() = default;
  SuperMatrix(std::size_t even_dim, std::size_t odd_dim, std::size_t generators);

  static SuperMatrix identity(std::size_t even_dim, std::size_t odd_dim, std::size_t generators);
  /// Elementary matrix E_ij (0-based indices).
  static SuperMatrix elementary(std::size_t even_dim, std::size_t odd_dim, std::size_t generators,
                                std::size_t i, std::size_t j);
  static SuperMatrix from_scalars(std::size_t even_dim, std::size_t odd_dim, const RationalMatrix& m,
                                  std::size_t generators = 0);

  std::size_t even_dim() const { return m_; }
  std::size_t odd_dim() const { return n_; }
  std::size_t size() const { return m_ + n_; }
  std::size_t generators() const { return q_; }

  Parity index_parity(std::size_t i) const { return i < m_ ? Parity::Even : Parity::Odd; }
  Parity block_parity(std::size_t i, std::size_t j) const { return index_parity(i) + index_parity(j); }

  const GrassmannElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  GrassmannElement& operator()(std::size_t i, std::size_t j) { return entries_[i * size() + j]; }

  bool is_zero() const;
  bool is_homogeneous(Parity p) const;
  /// Parity of a homogeneous matrix; nullopt when mixed. Zero is even.
  std::optional<Parity> parity() const;
  bool is_even() const { return is_homogeneous(Parity::Even); }
  /// Homogeneous component of parity p.
  SuperMatrix part(Parity p) const;

  /// Body (Grassmann degree-0 part) of every entry.
  RationalMatrix body() const;

  /// Inverse of an even supermatrix by Gauss-Jordan elimination over the
  /// Grassmann entries. Requires both diagonal blocks to have invertible body.
  SuperMatrix inverse() const;

  SuperMatrix& operator+=(const SuperMatrix& other);
  SuperMatrix& operator-=(const SuperMatrix& other);
  SuperMatrix& operator*=(const Scalar& s);

  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  friend SuperMatrix operator*(SuperMatrix a, const Scalar& s) { return a *= s; }
  friend SuperMatrix operator*(const Scalar& s, SuperMatrix a) { return a *= s; }
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  /// Left multiplication of every entry by a Grassmann element.
  friend SuperMatrix operator*(const GrassmannElement& c, const SuperMatrix& a);
  SuperMatrix operator-() const;
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.q_ == b.q_ && a.entries_ == b.entries_;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_shape(const SuperMatrix& other) const;

  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::size_t q_ = 0;
  std::vector<GrassmannElement> entries_;
};

/// Superbracket [X,Y] = XY - (-1)^{|X||Y|} YX, extended bilinearly over
/// the homogeneous components of X and Y.
SuperMatrix superbracket(const SuperMatrix& x, const SuperMatrix& y);

/// The parity matrix diag(1,...,1,-1,...,-1).
SuperMatrix parity_matrix(std::size_t even_dim, std::size_t odd_dim, std::size_t generators);

}  // namespace superlie
