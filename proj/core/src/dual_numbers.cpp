#include "superlie/dual_numbers.hpp"

#include "superlie/errors.hpp"

namespace superlie {

namespace {

/// a*e1 = e1*sigma(a) where sigma negates the odd part.
GrassmannElement twist(const GrassmannElement& a) { return a.even_part() - a.odd_part(); }

/// Entrywise sigma on a supermatrix.
SuperMatrix twist(const SuperMatrix& m) {
  SuperMatrix out = m;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = twist(m(i, j));
  }
  return out;
}

}  // namespace

DualNumber DualNumber::constant(const GrassmannElement& a) {
  const std::size_t q = a.generators();
  return {a, GrassmannElement(q), GrassmannElement(q)};
}

DualNumber DualNumber::inverse() const {
  if (!base.is_even()) throw ParityError("dual number with non-even base is not inverted");
  const GrassmannElement inv = base.inverse();
  return {inv, -(inv * eps0 * inv), -(inv * eps1 * inv)};
}

DualNumber operator+(const DualNumber& x, const DualNumber& y) {
  return {x.base + y.base, x.eps0 + y.eps0, x.eps1 + y.eps1};
}

DualNumber operator-(const DualNumber& x, const DualNumber& y) {
  return {x.base - y.base, x.eps0 - y.eps0, x.eps1 - y.eps1};
}

DualNumber operator*(const DualNumber& x, const DualNumber& y) {
  return {x.base * y.base, x.base * y.eps0 + x.eps0 * y.base, twist(x.base) * y.eps1 + x.eps1 * y.base};
}

std::string DualNumber::to_string() const {
  return base.to_string() + " + e0*(" + eps0.to_string() + ") + e1*(" + eps1.to_string() + ")";
}

DualNumberPoint::DualNumberPoint(SuperMatrix base, SuperMatrix eps0, SuperMatrix eps1)
    : base_(std::move(base)), eps0_(std::move(eps0)), eps1_(std::move(eps1)) {
  if (!(base_.size() == eps0_.size() && base_.size() == eps1_.size() && base_.even_dim() == eps0_.even_dim() &&
        base_.even_dim() == eps1_.even_dim())) {
    throw DimensionError("dual-number point components have different shapes");
  }
}

DualNumberPoint DualNumberPoint::tangent(const SuperMatrix& u) {
  return DualNumberPoint(SuperMatrix::identity(u.even_dim(), u.odd_dim(), u.generators()), u.part(Parity::Even),
                         u.part(Parity::Odd));
}

DualNumber DualNumberPoint::entry(std::size_t i, std::size_t j) const { return {base_(i, j), eps0_(i, j), eps1_(i, j)}; }

bool DualNumberPoint::in_kernel_of_projection() const {
  return base_ == SuperMatrix::identity(base_.even_dim(), base_.odd_dim(), base_.generators());
}

DualNumberPoint operator*(const DualNumberPoint& a, const DualNumberPoint& b) {
  return DualNumberPoint(a.base_ * b.base_, a.base_ * b.eps0_ + a.eps0_ * b.base_,
                         twist(a.base_) * b.eps1_ + a.eps1_ * b.base_);
}

DualNumberPoint DualNumberPoint::inverse() const {
  const SuperMatrix inv = base_.inverse();
  // (b + e1 C)(b^-1 + e1 D) = 1 forces sigma(b) D = -C b^-1.
  return DualNumberPoint(inv, -(inv * eps0_ * inv), -(twist(base_).inverse() * eps1_ * inv));
}

}  // namespace superlie
