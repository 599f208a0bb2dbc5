#include "superlie/polynomial.hpp"

#include <sstream>

#include "superlie/errors.hpp"

namespace superlie {

Polynomial::Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::from_ints(std::initializer_list<long> coefficients) {
  std::vector<Scalar> c;
  for (long v : coefficients) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

Polynomial Polynomial::monomial(std::size_t k, const Scalar& c) {
  std::vector<Scalar> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && superlie::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out(*this);
  const Scalar lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalMatrix Polynomial::operator()(const RationalMatrix& m) const {
  if (!m.is_square()) throw DimensionError("polynomial evaluation needs a square matrix");
  const std::size_t n = m.rows();
  RationalMatrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (superlie::is_zero(c)) continue;
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) os << superlie::to_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << variable;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw SingularError("polynomial division by zero");
  std::vector<Scalar> rem = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {Polynomial(), a};
  std::vector<Scalar> quot(rem.size() - db);
  const Scalar lb = b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (is_zero(rem[k])) continue;
    const Scalar f = rem[k] / lb;
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coefficients()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
  // Extended Euclid tracking only the coefficient of a.
  Polynomial r0 = m;
  Polynomial r1 = a % m;
  Polynomial s0;
  Polynomial s1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw NotAUnitError("polynomial is not invertible modulo " + m.to_string());
  return (s0 * (Scalar(1) / r0.leading())) % m;
}

Polynomial compose_mod(const Polynomial& f, const Polynomial& g, const Polynomial& m) {
  Polynomial acc;
  const auto& c = f.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = (acc * g + Polynomial::constant(c[k])) % m;
  return acc;
}

Polynomial characteristic_polynomial(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  RationalMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const RationalMatrix amk = m * mk;
    c[n - k] = -amk.trace() / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

}  // namespace superlie
