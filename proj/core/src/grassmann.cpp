#include "superlie/grassmann.hpp"

#include <bit>
#include <cstdlib>
#include <sstream>

#include "superlie/errors.hpp"

namespace superlie {

std::size_t generator_budget() {
  static const std::size_t budget = [] {
    constexpr std::size_t kDefault = 8;
    const char* env = std::getenv("SUPERLIE_GENERATOR_BUDGET");
    if (env == nullptr || *env == '\0') return kDefault;
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0') return kDefault;
    return std::min<std::size_t>(value, kMaxGenerators);
  }();
  return budget;
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  // Each generator j of b passes over the generators of a that exceed j.
  unsigned inversions = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    const std::uint32_t above = j >= 31 ? 0U : (~0U << (j + 1));
    inversions += static_cast<unsigned>(std::popcount(a & above));
  }
  return (inversions & 1U) ? -1 : 1;
}

GrassmannElement::GrassmannElement(std::size_t generators) : generators_(generators) {
  if (generators > kMaxGenerators) {
    throw BudgetError("Grassmann algebra with " + std::to_string(generators) +
                      " generators exceeds the encoding limit");
  }
  if (generators > generator_budget()) {
    throw BudgetError("Grassmann algebra with " + std::to_string(generators) +
                      " generators exceeds the generator budget of " + std::to_string(generator_budget()));
  }
}

GrassmannElement GrassmannElement::constant(std::size_t generators, const Scalar& value) {
  GrassmannElement e(generators);
  e.add_term(0, value);
  return e;
}

GrassmannElement GrassmannElement::generator(std::size_t generators, std::size_t index) {
  if (index >= generators) throw DimensionError("generator index out of range");
  return monomial(generators, Mask{1} << index);
}

GrassmannElement GrassmannElement::monomial(std::size_t generators, Mask mask, const Scalar& coefficient) {
  GrassmannElement e(generators);
  if (generators < 32 && (mask >> generators) != 0) throw DimensionError("monomial uses a missing generator");
  e.add_term(mask, coefficient);
  return e;
}

Scalar GrassmannElement::coefficient(Mask mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool GrassmannElement::is_even() const {
  for (const auto& [mask, c] : terms_) {
    if (mask_parity(mask) == Parity::Odd) return false;
  }
  return true;
}

bool GrassmannElement::is_odd() const {
  for (const auto& [mask, c] : terms_) {
    if (mask_parity(mask) == Parity::Even) return false;
  }
  return true;
}

std::optional<Parity> GrassmannElement::parity() const {
  if (is_even()) return Parity::Even;
  if (is_odd()) return Parity::Odd;
  return std::nullopt;
}

GrassmannElement GrassmannElement::part(Parity p) const {
  GrassmannElement out(generators_);
  for (const auto& [mask, c] : terms_) {
    if (mask_parity(mask) == p) out.terms_.emplace(mask, c);
  }
  return out;
}

GrassmannElement GrassmannElement::degree_part(std::size_t degree) const {
  GrassmannElement out(generators_);
  for (const auto& [mask, c] : terms_) {
    if (static_cast<std::size_t>(std::popcount(mask)) == degree) out.terms_.emplace(mask, c);
  }
  return out;
}

GrassmannElement GrassmannElement::inverse() const {
  const Scalar c = body();
  if (superlie::is_zero(c)) throw NotAUnitError("Grassmann element with zero body is not a unit: " + to_string());
  if (!is_even()) throw ParityError("only even Grassmann elements are inverted: " + to_string());
  const Scalar c_inv = 1 / c;
  // nilpotent = 1 - a/c; its (q+1)-th power vanishes.
  GrassmannElement nilpotent = one(generators_) - (*this) * c_inv;
  GrassmannElement sum = one(generators_);
  GrassmannElement power = one(generators_);
  for (std::size_t k = 0; k < generators_; ++k) {
    power = power * nilpotent;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * c_inv;
}

GrassmannElement GrassmannElement::extended(std::size_t generators) const {
  if (generators < generators_) throw DimensionError("cannot shrink a Grassmann algebra");
  GrassmannElement out(generators);
  out.terms_ = terms_;
  return out;
}

void GrassmannElement::add_term(Mask mask, const Scalar& coefficient) {
  if (superlie::is_zero(coefficient)) return;
  auto [it, inserted] = terms_.try_emplace(mask, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (superlie::is_zero(it->second)) terms_.erase(it);
  }
}

void GrassmannElement::check_same_algebra(const GrassmannElement& other) const {
  if (generators_ != other.generators_) {
    throw DimensionError("Grassmann generator counts differ: " + std::to_string(generators_) + " vs " +
                         std::to_string(other.generators_));
  }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& other) {
  check_same_algebra(other);
  for (const auto& [mask, c] : other.terms_) add_term(mask, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& other) {
  check_same_algebra(other);
  for (const auto& [mask, c] : other.terms_) add_term(mask, -c);
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(const Scalar& factor) {
  if (superlie::is_zero(factor)) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, c] : terms_) c *= factor;
  return *this;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement out(*this);
  for (auto& [mask, c] : out.terms_) c = -c;
  return out;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  a.check_same_algebra(b);
  GrassmannElement out(a.generators_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const int sign = merge_sign(ma, mb);
      if (sign == 0) continue;
      Scalar product = ca * cb;
      if (sign < 0) product = -product;
      out.add_term(ma | mb, product);
    }
  }
  return out;
}

std::string GrassmannElement::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    std::string word;
    for (std::size_t i = 0; i < generators_; ++i) {
      if (mask & (Mask{1} << i)) word += i < names.size() ? names[i] : "e" + std::to_string(i + 1);
    }
    Scalar magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (word.empty()) {
      os << magnitude.get_str();
    } else if (magnitude == 1) {
      os << word;
    } else {
      os << magnitude.get_str() << "*" << word;
    }
  }
  return os.str();
}

GrassmannElement grassmann_mul(const GrassmannElement& a, const GrassmannElement& b) { return a * b; }

GrassmannElement grassmann_inverse(const GrassmannElement& a) { return a.inverse(); }

}  // namespace superlie
