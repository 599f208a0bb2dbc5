#pragma once

#include <string>

#include "superlie/grassmann.hpp"
#include "superlie/supermatrix.hpp"

namespace superlie {

/// a + e0*b + e1*c in A[e0, e1] with A = Lambda(q), |e0| = 0, |e1| = 1 and
/// e_i e_j = 0.
struct DualNumber {
  GrassmannElement base;
  GrassmannElement eps0;
  GrassmannElement eps1;

  static DualNumber constant(const GrassmannElement& a);

  bool is_zero() const { return base.is_zero() && eps0.is_zero() && eps1.is_zero(); }
  /// Inverse when the base is an even unit.
  DualNumber inverse() const;

  friend DualNumber operator+(const DualNumber& x, const DualNumber& y);
  friend DualNumber operator-(const DualNumber& x, const DualNumber& y);
  friend DualNumber operator*(const DualNumber& x, const DualNumber& y);
  friend bool operator==(const DualNumber& x, const DualNumber& y) = default;

  std::string to_string() const;
};

/// p_A: A[e0, e1] -> A.
inline const GrassmannElement& project(const DualNumber& x) { return x.base; }

/// A point of GL(m|n)(A[e0, e1]) written as base + e0*M0 + e1*M1.
class DualNumberPoint {
 public:
  DualNumberPoint(SuperMatrix base, SuperMatrix eps0, SuperMatrix eps1);

  /// 1 + e0*u0 + e1*u1, where u = u0 + u1 holds the values u(c_ij).
  static DualNumberPoint tangent(const SuperMatrix& u);

  const SuperMatrix& base() const { return base_; }
  const SuperMatrix& eps0() const { return eps0_; }
  const SuperMatrix& eps1() const { return eps1_; }
  DualNumber entry(std::size_t i, std::size_t j) const;

  /// Membership in ker G(p_A).
  bool in_kernel_of_projection() const;

  DualNumberPoint inverse() const;
  friend DualNumberPoint operator*(const DualNumberPoint& a, const DualNumberPoint& b);
  friend bool operator==(const DualNumberPoint& a, const DualNumberPoint& b) {
    return a.base_ == b.base_ && a.eps0_ == b.eps0_ && a.eps1_ == b.eps1_;
  }

 private:
  SuperMatrix base_;
  SuperMatrix eps0_;
  SuperMatrix eps1_;
};

}  // namespace superlie
