#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "superlie/linalg.hpp"
#include "superlie/scalar.hpp"

namespace superlie {

/// Univariate polynomial over the rationals, coefficients in increasing
/// degree order with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients);
  /// Convenience constructor from integer coefficients, lowest degree first.
  static Polynomial from_ints(std::initializer_list<long> coefficients);
  static Polynomial constant(const Scalar& c);
  /// The monomial c*x^k.
  static Polynomial monomial(std::size_t k, const Scalar& c = Scalar(1));

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
  Scalar leading() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar operator()(const Scalar& x) const;
  /// Evaluates at a square matrix by Horner's rule.
  RationalMatrix operator()(const RationalMatrix& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string to_string(const std::string& variable = "x") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Inverse of a modulo m; throws NotAUnitError when gcd(a, m) != 1.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);
/// Composition f(g) reduced modulo m.
Polynomial compose_mod(const Polynomial& f, const Polynomial& g, const Polynomial& m);

/// Characteristic polynomial det(xI - M) via Faddeev-LeVerrier.
Polynomial characteristic_polynomial(const RationalMatrix& m);
/// p / gcd(p, p'), made monic.
Polynomial square_free_part(const Polynomial& p);

}  // namespace superlie
