#include "superlie/hopf_abelian.hpp"

#include <bit>
#include <cstdlib>
#include <sstream>

#include "superlie/errors.hpp"
#include "superlie/grassmann.hpp"

namespace superlie {

Parity HopfShape::parity(const Monomial& m) const {
  std::uint64_t odd = 0;
  for (std::size_t i = l; i < l + k; ++i) odd += m.exps[i];
  return parity_of(odd);
}

std::uint64_t HopfShape::degree(const Monomial& m) const {
  std::uint64_t d = 0;
  for (auto g : m.torus) d += static_cast<std::uint64_t>(g < 0 ? -g : g);
  for (auto e : m.exps) d += e;
  return d;
}

bool HopfShape::is_unipotent(const Monomial& m) const {
  for (auto g : m.torus) {
    if (g != 0) return false;
  }
  return true;
}

std::uint32_t HopfShape::odd_mask(const Monomial& m) const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (m.exps[l + i]) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

std::pair<int, Monomial> HopfShape::multiply(const Monomial& a, const Monomial& b) const {
  const int sign = merge_sign(odd_mask(a), odd_mask(b));
  if (sign == 0) return {0, one()};
  Monomial m = a;
  for (std::size_t i = 0; i < r; ++i) m.torus[i] += b.torus[i];
  for (std::size_t i = 0; i < l + k; ++i) m.exps[i] += b.exps[i];
  return {sign, m};
}

HopfElement HopfElement::monomial(HopfShape shape, Monomial m, const Scalar& c) {
  if (m.torus.size() != shape.r || m.exps.size() != shape.unipotent()) {
    throw DimensionError("monomial does not match the Hopf algebra");
  }
  for (std::size_t i = shape.l; i < shape.unipotent(); ++i) {
    if (m.exps[i] > 1) return HopfElement(shape);
  }
  HopfElement e(shape);
  e.add_term(m, c);
  return e;
}

HopfElement HopfElement::constant(HopfShape shape, const Scalar& c) { return monomial(shape, shape.one(), c); }

Scalar HopfElement::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<Parity> HopfElement::parity() const {
  std::optional<Parity> p;
  for (const auto& [m, c] : terms_) {
    const Parity q = shape_.parity(m);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(Parity::Even);
}

bool HopfElement::is_nilpotent() const {
  for (const auto& [m, c] : terms_) {
    if (shape_.odd_mask(m) == 0) return false;
  }
  return true;
}

void HopfElement::add_term(const Monomial& m, const Scalar& c) {
  if (superlie::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (superlie::is_zero(it->second)) terms_.erase(it);
  }
}

void HopfElement::check(const HopfElement& o) const {
  if (!(shape_ == o.shape_)) throw DimensionError("Hopf elements from different algebras");
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

HopfElement& HopfElement::operator*=(const Scalar& s) {
  if (superlie::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

HopfElement operator*(const HopfElement& a, const HopfElement& b) {
  a.check(b);
  HopfElement out(a.shape_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const auto [sign, m] = a.shape_.multiply(ma, mb);
      if (sign == 0) continue;
      out.add_term(m, sign > 0 ? Scalar(ca * cb) : Scalar(-ca * cb));
    }
  }
  return out;
}

HopfElement HopfElement::power(std::size_t n) const {
  HopfElement out = constant(shape_, 1);
  for (std::size_t i = 0; i < n; ++i) out = out * (*this);
  return out;
}

HopfTensor HopfTensor::tensor(const HopfElement& a, const HopfElement& b) {
  HopfTensor t({a.shape(), b.shape()});
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) t.add_term({ma, mb}, ca * cb);
  }
  return t;
}

HopfTensor HopfTensor::single(const HopfElement& a) {
  HopfTensor t({a.shape()});
  for (const auto& [m, c] : a.terms()) t.add_term({m}, c);
  return t;
}

Scalar HopfTensor::coefficient(const std::vector<Monomial>& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void HopfTensor::add_term(const std::vector<Monomial>& key, const Scalar& c) {
  if (superlie::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (superlie::is_zero(it->second)) terms_.erase(it);
  }
}

void HopfTensor::check(const HopfTensor& o) const {
  if (shapes_ != o.shapes_) throw DimensionError("tensors over different factor algebras");
}

HopfTensor& HopfTensor::operator+=(const HopfTensor& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

HopfTensor& HopfTensor::operator-=(const HopfTensor& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

HopfTensor& HopfTensor::operator*=(const Scalar& s) {
  if (superlie::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

HopfTensor operator*(const HopfTensor& a, const HopfTensor& b) {
  a.check(b);
  const std::size_t n = a.shapes_.size();
  HopfTensor out(a.shapes_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // b_j passes a_{j+1}, ..., a_n
      int sign = 1;
      std::vector<Monomial> key(n);
      Parity later = Parity::Even;
      for (std::size_t j = n; j-- > 0;) {
        if (is_odd(a.shapes_[j].parity(kb[j])) && is_odd(later)) sign = -sign;
        later += a.shapes_[j].parity(ka[j]);
      }
      for (std::size_t j = 0; j < n && sign != 0; ++j) {
        auto [s, m] = a.shapes_[j].multiply(ka[j], kb[j]);
        sign *= s;
        key[j] = std::move(m);
      }
      if (sign == 0) continue;
      out.add_term(key, sign > 0 ? Scalar(ca * cb) : Scalar(-ca * cb));
    }
  }
  return out;
}

AbelianHopfAlgebra::AbelianHopfAlgebra(std::size_t r, std::size_t l, std::size_t k,
                                       std::vector<std::string> torus_names, std::vector<std::string> names)
    : shape_{r, l, k}, torus_names_(std::move(torus_names)), names_(std::move(names)) {
  if (k > kMaxGenerators) throw BudgetError("too many odd generators");
  if (torus_names_.empty()) {
    for (std::size_t a = 0; a < r; ++a) torus_names_.push_back(r == 1 ? "t" : "t" + std::to_string(a + 1));
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < l + k; ++i) names_.push_back("z" + std::to_string(i + 1));
  }
  if (torus_names_.size() != r || names_.size() != l + k) throw DimensionError("generator name count mismatch");
}

HopfElement AbelianHopfAlgebra::grouplike(std::size_t a, std::int64_t exponent) const {
  if (a >= shape_.r) throw DimensionError("torus generator out of range");
  Monomial m = shape_.one();
  m.torus[a] = exponent;
  return monomial(m);
}

HopfElement AbelianHopfAlgebra::generator(std::size_t i) const {
  if (i >= shape_.unipotent()) throw DimensionError("primitive generator out of range");
  Monomial m = shape_.one();
  m.exps[i] = 1;
  return monomial(m);
}

HopfElement AbelianHopfAlgebra::monomial(const Monomial& m, const Scalar& c) const {
  return HopfElement::monomial(shape_, m, c);
}

HopfElement AbelianHopfAlgebra::named(const std::string& name) const {
  for (std::size_t a = 0; a < torus_names_.size(); ++a) {
    if (torus_names_[a] == name) return grouplike(a);
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return generator(i);
  }
  throw PreconditionError("no generator named " + name);
}

int AbelianHopfAlgebra::comultiplication_sign(const std::vector<std::uint32_t>& lambda,
                                              const std::vector<std::uint32_t>& mu) const {
  const std::size_t l = shape_.l;
  std::size_t pairs = 0;
  for (std::size_t i = l; i < l + shape_.k; ++i) {
    if (mu[i] != 1) continue;
    for (std::size_t j = l; j < i; ++j) {
      if (lambda[j] - mu[j] == 1) ++pairs;
    }
  }
  int sign = (pairs & 1U) ? -1 : 1;
  if (corrupted_ && corrupted_->first == lambda && corrupted_->second == mu) sign = -sign;
  return sign;
}

void AbelianHopfAlgebra::corrupt_sign(std::vector<std::uint32_t> lambda, std::vector<std::uint32_t> mu) {
  if (lambda.size() != shape_.unipotent() || mu.size() != shape_.unipotent()) {
    throw DimensionError("exponent vectors do not match the Hopf algebra");
  }
  corrupted_.emplace(std::move(lambda), std::move(mu));
}

HopfTensor AbelianHopfAlgebra::comultiply(const Monomial& m) const {
  HopfTensor out({shape_, shape_});
  const std::size_t n = shape_.unipotent();
  Monomial left = shape_.one();
  left.torus = m.torus;
  // enumerate mu <= lambda
  std::vector<std::uint32_t> mu(n, 0);
  while (true) {
    Scalar c = comultiplication_sign(m.exps, mu);
    for (std::size_t i = 0; i < shape_.l; ++i) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), m.exps[i], mu[i]);
      c *= mpq_class(binom);
    }
    Monomial a = left;
    Monomial b = left;
    a.exps = mu;
    for (std::size_t i = 0; i < n; ++i) b.exps[i] = m.exps[i] - mu[i];
    out.add_term({a, b}, c);
    std::size_t i = 0;
    while (i < n && mu[i] == m.exps[i]) mu[i++] = 0;
    if (i == n) break;
    ++mu[i];
  }
  return out;
}

HopfTensor AbelianHopfAlgebra::comultiply(const HopfElement& a) const {
  HopfTensor out({shape_, shape_});
  for (const auto& [m, c] : a.terms()) out += comultiply(m) * c;
  return out;
}

Scalar AbelianHopfAlgebra::counit(const Monomial& m) const {
  for (auto e : m.exps) {
    if (e != 0) return 0;
  }
  return 1;
}

Scalar AbelianHopfAlgebra::counit(const HopfElement& a) const {
  Scalar s = 0;
  for (const auto& [m, c] : a.terms()) s += c * counit(m);
  return s;
}

HopfElement AbelianHopfAlgebra::antipode(const HopfElement& a) const {
  HopfElement out(shape_);
  for (const auto& [m, c] : a.terms()) {
    Monomial inv = m;
    for (auto& g : inv.torus) g = -g;
    std::uint64_t deg = 0;
    for (auto e : m.exps) deg += e;
    out.add_term(inv, (deg & 1U) ? Scalar(-c) : c);
  }
  return out;
}

std::vector<Monomial> AbelianHopfAlgebra::basis_up_to(std::size_t d) const {
  std::vector<Monomial> out;
  const std::size_t n = shape_.unipotent();
  for (std::size_t degree = 0; degree <= d; ++degree) {
    // distribute `degree` over r torus slots (with signs) and n exponent slots
    std::vector<std::int64_t> torus(shape_.r, 0);
    std::vector<std::uint32_t> exps(n, 0);
    auto rec = [&](auto&& self, std::size_t slot, std::size_t left) -> void {
      if (slot == shape_.r + n) {
        if (left == 0) out.push_back({torus, exps});
        return;
      }
      if (slot < shape_.r) {
        for (std::size_t v = 0; v <= left; ++v) {
          torus[slot] = static_cast<std::int64_t>(v);
          self(self, slot + 1, left - v);
          if (v > 0) {
            torus[slot] = -static_cast<std::int64_t>(v);
            self(self, slot + 1, left - v);
          }
        }
        torus[slot] = 0;
        return;
      }
      const std::size_t i = slot - shape_.r;
      const std::size_t cap = i >= shape_.l ? std::min<std::size_t>(left, 1) : left;
      for (std::size_t v = 0; v <= cap; ++v) {
        exps[i] = static_cast<std::uint32_t>(v);
        self(self, slot + 1, left - v);
      }
      exps[i] = 0;
    };
    rec(rec, 0, degree);
  }
  return out;
}

std::string AbelianHopfAlgebra::format(const Monomial& m) const {
  std::string out;
  for (std::size_t a = 0; a < shape_.r; ++a) {
    if (m.torus[a] == 0) continue;
    out += torus_names_[a];
    if (m.torus[a] != 1) out += "^" + std::to_string(m.torus[a]);
  }
  for (std::size_t i = 0; i < shape_.unipotent(); ++i) {
    if (m.exps[i] == 0) continue;
    out += names_[i];
    if (m.exps[i] != 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string signed_terms(const std::vector<std::pair<std::string, Scalar>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [word, c] : terms) {
    const Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (word == "1") {
      os << to_string(mag);
    } else if (mag == 1) {
      os << word;
    } else {
      os << to_string(mag) << "*" << word;
    }
  }
  return os.str();
}

}  // namespace

std::string AbelianHopfAlgebra::format(const HopfElement& a) const {
  std::vector<std::pair<std::string, Scalar>> terms;
  for (const auto& [m, c] : a.terms()) terms.emplace_back(format(m), c);
  return signed_terms(terms);
}

std::string format_tensor(const HopfTensor& t, const std::vector<const AbelianHopfAlgebra*>& factors) {
  if (factors.size() != t.shapes().size()) throw DimensionError("factor list does not match the tensor");
  std::vector<std::pair<std::string, Scalar>> terms;
  for (const auto& [key, c] : t.terms()) {
    std::string word;
    for (std::size_t j = 0; j < key.size(); ++j) word += (j ? "(x)" : "") + factors[j]->format(key[j]);
    bool all_one = true;
    for (std::size_t j = 0; j < key.size(); ++j) all_one = all_one && factors[j]->format(key[j]) == "1";
    terms.emplace_back(all_one && key.size() == 1 ? "1" : word, c);
  }
  return signed_terms(terms);
}

FreeHopfSuperalgebra::FreeHopfSuperalgebra(const std::vector<std::pair<std::string, GeneratorKind>>& generators)
    : hopf_(build(generators)) {}

AbelianHopfAlgebra FreeHopfSuperalgebra::build(const std::vector<std::pair<std::string, GeneratorKind>>& generators) {
  std::vector<std::string> torus;
  std::vector<std::string> even;
  std::vector<std::string> odd;
  for (const auto& [name, kind] : generators) {
    switch (kind) {
      case GeneratorKind::GroupLike:
        torus.push_back(name);
        break;
      case GeneratorKind::EvenPrimitive:
        even.push_back(name);
        break;
      case GeneratorKind::OddPrimitive:
        odd.push_back(name);
        break;
    }
  }
  std::vector<std::string> names = even;
  names.insert(names.end(), odd.begin(), odd.end());
  return AbelianHopfAlgebra(torus.size(), even.size(), odd.size(), torus, names);
}

HopfTensor apply_comultiplication(const AbelianHopfAlgebra& h, const HopfTensor& t, std::size_t factor) {
  return t.map_factor(factor, {h.shape(), h.shape()}, [&h](const Monomial& m) { return h.comultiply(m); });
}

HopfTensor apply_counit(const AbelianHopfAlgebra& h, const HopfTensor& t, std::size_t factor) {
  return t.map_factor(factor, {}, [&h](const Monomial& m) {
    HopfTensor s(std::vector<HopfShape>{});
    s.add_term({}, h.counit(m));
    return s;
  });
}

HopfTensor apply_antipode(const AbelianHopfAlgebra& h, const HopfTensor& t, std::size_t factor) {
  return t.map_factor(factor, {h.shape()},
                      [&h](const Monomial& m) { return HopfTensor::single(h.antipode(h.monomial(m))); });
}

HopfTensor multiply_factors(const HopfTensor& t, std::size_t p) {
  const auto& shapes = t.shapes();
  if (p + 1 >= shapes.size() || !(shapes[p] == shapes[p + 1])) throw DimensionError("cannot multiply these factors");
  std::vector<HopfShape> out_shapes = shapes;
  out_shapes.erase(out_shapes.begin() + static_cast<std::ptrdiff_t>(p) + 1);
  HopfTensor out(out_shapes);
  for (const auto& [key, c] : t.terms()) {
    const auto [sign, m] = shapes[p].multiply(key[p], key[p + 1]);
    if (sign == 0) continue;
    std::vector<Monomial> k = key;
    k[p] = m;
    k.erase(k.begin() + static_cast<std::ptrdiff_t>(p) + 1);
    out.add_term(k, sign > 0 ? c : Scalar(-c));
  }
  return out;
}

HopfElement to_element(const HopfTensor& t) {
  if (t.shapes().size() != 1) throw DimensionError("tensor has more than one factor");
  HopfElement e(t.shapes()[0]);
  for (const auto& [key, c] : t.terms()) e.add_term(key[0], c);
  return e;
}

HopfReport verify_hopf(const AbelianHopfAlgebra& h, std::size_t d) {
  if (d == 0) throw PreconditionError("truncation degree must be at least 1");
  HopfReport report;
  for (const Monomial& m : h.basis_up_to(d)) {
    ++report.monomials_checked;
    const HopfElement a = h.monomial(m);
    const HopfTensor delta = h.comultiply(m);
    if (!(apply_comultiplication(h, delta, 0) == apply_comultiplication(h, delta, 1))) {
      report.coassociative = false;
      report.witness = m;
      report.failure = "coassociativity fails on " + h.format(m);
      return report;
    }
    const HopfTensor as_tensor = HopfTensor::single(a);
    if (!(apply_counit(h, delta, 0) == as_tensor) || !(apply_counit(h, delta, 1) == as_tensor)) {
      report.counit = false;
      report.witness = m;
      report.failure = "counit law fails on " + h.format(m);
      return report;
    }
    const HopfTensor unit = HopfTensor::single(h.one() * h.counit(m));
    if (!(multiply_factors(apply_antipode(h, delta, 0), 0) == unit) ||
        !(multiply_factors(apply_antipode(h, delta, 1), 0) == unit)) {
      report.antipode = false;
      report.witness = m;
      report.failure = "antipode law fails on " + h.format(m);
      return report;
    }
  }
  return report;
}

}  // namespace superlie
