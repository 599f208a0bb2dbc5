#include "superlie/linalg.hpp"

#include <sstream>

#include "superlie/errors.hpp"

namespace superlie {

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

void axpy(const Scalar& s, const Vector& x, Vector& y) {
  if (x.size() != y.size()) throw DimensionError("vector length mismatch");
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += s * x[i];
  }
}

Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v.at(index) = 1;
  return v;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> row_major)
    : RationalMatrix(rows, cols) {
  if (row_major.size() != rows * cols) throw DimensionError("initializer size mismatch");
  std::size_t i = 0;
  for (long x : row_major) data_[i++] = x;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Vector RationalMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector RationalMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void RationalMatrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool RationalMatrix::is_zero() const { return superlie::is_zero(data_); }

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Scalar RationalMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of a non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionError("flattened size mismatch");
  RationalMatrix m(rows, cols);
  m.data_ = v;
  return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Vector operator*(const RationalMatrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

RowEchelon rref(RationalMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) {
      for (std::size_t j = c; j < cols; ++j) swap(m(pivot, j), m(lead, j));
    }
    const Scalar inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(m(lead, j)) != 0) m(lead, j) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      const Scalar factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(lead, j)) != 0) m(r, j) -= factor * m(lead, j);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  RationalMatrix reduced(lead, cols);
  for (std::size_t r = 0; r < lead; ++r) {
    for (std::size_t j = 0; j < cols; ++j) reduced(r, j) = m(r, j);
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(const RationalMatrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.matrix(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(RationalMatrix m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Scalar factor = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= factor * m(c, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  RationalMatrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  const RowEchelon e = rref(std::move(augmented));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw SingularError("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.matrix(r, n + c);
  }
  return inv;
}

std::size_t rank_of(std::span<const Vector> vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(RationalMatrix::from_rows(vectors, dim));
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

RationalMatrix power(const RationalMatrix& m, std::size_t exponent) {
  RationalMatrix result = RationalMatrix::identity(m.rows());
  for (std::size_t i = 0; i < exponent; ++i) result = result * m;
  return result;
}

}  // namespace superlie
