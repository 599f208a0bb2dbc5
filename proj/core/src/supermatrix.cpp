#include "superlie/supermatrix.hpp"

#include <sstream>

#include "superlie/errors.hpp"

namespace superlie {

SuperMatrix::SuperMatrix(std::size_t even_dim, std::size_t odd_dim, std::size_t generators)
    : m_(even_dim), n_(odd_dim), q_(generators),
      entries_((even_dim + odd_dim) * (even_dim + odd_dim), GrassmannElement(generators)) {}

SuperMatrix SuperMatrix::identity(std::size_t even_dim, std::size_t odd_dim, std::size_t generators) {
  SuperMatrix id(even_dim, odd_dim, generators);
  for (std::size_t i = 0; i < id.size(); ++i) id(i, i) = GrassmannElement::one(generators);
  return id;
}

SuperMatrix SuperMatrix::elementary(std::size_t even_dim, std::size_t odd_dim, std::size_t generators,
                                    std::size_t i, std::size_t j) {
  SuperMatrix e(even_dim, odd_dim, generators);
  if (i >= e.size() || j >= e.size()) throw DimensionError("elementary matrix index out of range");
  e(i, j) = GrassmannElement::one(generators);
  return e;
}

SuperMatrix SuperMatrix::from_scalars(std::size_t even_dim, std::size_t odd_dim, const RationalMatrix& m,
                                      std::size_t generators) {
  SuperMatrix out(even_dim, odd_dim, generators);
  if (m.rows() != out.size() || m.cols() != out.size()) throw DimensionError("scalar matrix shape mismatch");
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) out(i, j) = GrassmannElement::constant(generators, m(i, j));
  }
  return out;
}

bool SuperMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool SuperMatrix::is_homogeneous(Parity p) const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      const Parity want = p + block_parity(i, j);
      const auto& e = (*this)(i, j);
      if (want == Parity::Even ? !e.is_even() : !e.is_odd()) return false;
    }
  }
  return true;
}

std::optional<Parity> SuperMatrix::parity() const {
  if (is_homogeneous(Parity::Even)) return Parity::Even;
  if (is_homogeneous(Parity::Odd)) return Parity::Odd;
  return std::nullopt;
}

SuperMatrix SuperMatrix::part(Parity p) const {
  SuperMatrix out(m_, n_, q_);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) out(i, j) = (*this)(i, j).part(p + block_parity(i, j));
  }
  return out;
}

RationalMatrix SuperMatrix::body() const {
  RationalMatrix b(size(), size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) b(i, j) = (*this)(i, j).body();
  }
  return b;
}

SuperMatrix SuperMatrix::inverse() const {
  if (!is_even()) throw ParityError("only even supermatrices are invertible here");
  const RationalMatrix b = body();
  RationalMatrix a00(m_, m_);
  RationalMatrix a11(n_, n_);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) a00(i, j) = b(i, j);
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) a11(i, j) = b(m_ + i, m_ + j);
  }
  if ((m_ > 0 && sgn(determinant(a00)) == 0) || (n_ > 0 && sgn(determinant(a11)) == 0)) {
    throw SingularError("a diagonal block has singular body");
  }

  // Gauss-Jordan by left row operations. Pivots are taken within the
  // diagonal block of the current column, where entries are even and the
  // body is invertible, so every pivot is a Grassmann unit.
  const std::size_t N = size();
  SuperMatrix work = *this;
  SuperMatrix inv = identity(m_, n_, q_);
  auto swap_rows = [N](SuperMatrix& s, std::size_t r1, std::size_t r2) {
    for (std::size_t j = 0; j < N; ++j) std::swap(s(r1, j), s(r2, j));
  };
  for (std::size_t c = 0; c < N; ++c) {
    const std::size_t block_end = c < m_ ? m_ : N;
    std::size_t pivot = c;
    while (pivot < block_end && superlie::is_zero(work(pivot, c).body())) ++pivot;
    if (pivot == block_end) throw SingularError("no unit pivot in column " + std::to_string(c));
    if (pivot != c) {
      swap_rows(work, pivot, c);
      swap_rows(inv, pivot, c);
    }
    const GrassmannElement p_inv = work(c, c).inverse();
    for (std::size_t j = 0; j < N; ++j) {
      work(c, j) = p_inv * work(c, j);
      inv(c, j) = p_inv * inv(c, j);
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c || work(r, c).is_zero()) continue;
      const GrassmannElement factor = work(r, c);
      for (std::size_t j = 0; j < N; ++j) {
        if (!work(c, j).is_zero()) work(r, j) -= factor * work(c, j);
        if (!inv(c, j).is_zero()) inv(r, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

void SuperMatrix::check_shape(const SuperMatrix& other) const {
  if (m_ != other.m_ || n_ != other.n_ || q_ != other.q_) {
    throw DimensionError("supermatrix shapes differ");
  }
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& other) {
  check_shape(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& other) {
  check_shape(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

SuperMatrix& SuperMatrix::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

SuperMatrix SuperMatrix::operator-() const {
  SuperMatrix out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  a.check_shape(b);
  const std::size_t N = a.size();
  SuperMatrix out(a.m_, a.n_, a.q_);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t k = 0; k < N; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < N; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

SuperMatrix operator*(const GrassmannElement& c, const SuperMatrix& a) {
  SuperMatrix out(a);
  for (auto& e : out.entries_) e = c * e;
  return out;
}

std::string SuperMatrix::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < size(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < size(); ++j) {
      if (j == m_ && m_ > 0) os << " |";
      os << (j ? " " : "") << (*this)(i, j).to_string(names);
      if (j + 1 < size() && j + 1 != m_) os << ",";
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

SuperMatrix superbracket(const SuperMatrix& x, const SuperMatrix& y) {
  SuperMatrix out(x.even_dim(), x.odd_dim(), x.generators());
  for (Parity px : {Parity::Even, Parity::Odd}) {
    const SuperMatrix xp = x.part(px);
    if (xp.is_zero()) continue;
    for (Parity py : {Parity::Even, Parity::Odd}) {
      const SuperMatrix yp = y.part(py);
      if (yp.is_zero()) continue;
      out += xp * yp;
      if (koszul_sign(px, py) > 0) {
        out -= yp * xp;
      } else {
        out += yp * xp;
      }
    }
  }
  return out;
}

SuperMatrix parity_matrix(std::size_t even_dim, std::size_t odd_dim, std::size_t generators) {
  SuperMatrix p = SuperMatrix::identity(even_dim, odd_dim, generators);
  for (std::size_t i = even_dim; i < even_dim + odd_dim; ++i) p(i, i) = -p(i, i);
  return p;
}

}  // namespace superlie
