#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "superlie/scalar.hpp"

namespace superlie {

using Vector = std::vector<Scalar>;

bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
void axpy(const Scalar& s, const Vector& x, Vector& y);
Vector unit_vector(std::size_t dim, std::size_t index);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> row_major);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(std::span<const Vector> rows, std::size_t cols);
  static RationalMatrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  bool is_zero() const;
  RationalMatrix transpose() const;
  Scalar trace() const;

  /// Row-major flattening, used to place matrices in gl(V) coordinates.
  Vector flatten() const { return data_; }
  static RationalMatrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Scalar& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Scalar& s) { return a *= s; }
  friend RationalMatrix operator*(const Scalar& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend Vector operator*(const RationalMatrix& a, const Vector& v);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  RationalMatrix matrix;              ///< reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;    ///< pivot column of each remaining row
};

/// Gauss-Jordan elimination to reduced row echelon form.
RowEchelon rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
/// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const RationalMatrix& m);
Scalar determinant(RationalMatrix m);
/// Throws SingularError when m is not invertible.
RationalMatrix inverse(const RationalMatrix& m);
/// Rank of a family of vectors of equal length.
std::size_t rank_of(std::span<const Vector> vectors, std::size_t dim);

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix power(const RationalMatrix& m, std::size_t exponent);

}  // namespace superlie
