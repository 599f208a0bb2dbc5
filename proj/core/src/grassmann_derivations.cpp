#include "superlie/grassmann_derivations.hpp"

#include <bit>

#include "superlie/errors.hpp"
#include "superlie/tensor_grassmann.hpp"

namespace superlie {

GrassmannElement right_partial(const GrassmannElement& a, std::size_t i) {
  if (i >= a.generators()) throw DimensionError("partial derivative index out of range");
  const std::uint32_t bit = std::uint32_t{1} << i;
  GrassmannElement out(a.generators());
  for (const auto& [mask, c] : a.terms()) {
    if (!(mask & bit)) continue;
    const int after = std::popcount(mask & ~((bit << 1) - 1));
    out += GrassmannElement::monomial(a.generators(), mask & ~bit, (after & 1) ? Scalar(-c) : c);
  }
  return out;
}

GrassmannDerivation::GrassmannDerivation(std::vector<GrassmannElement> components) : f_(std::move(components)) {
  for (const auto& f : f_) {
    if (f.generators() != f_.size()) throw DimensionError("derivation components must live in Lambda(n)");
  }
}

GrassmannDerivation GrassmannDerivation::basis(std::size_t generators, std::size_t i, std::uint32_t mask) {
  if (i >= generators) throw DimensionError("derivation index out of range");
  std::vector<GrassmannElement> f(generators, GrassmannElement(generators));
  f[i] = GrassmannElement::monomial(generators, mask);
  return GrassmannDerivation(std::move(f));
}

Parity GrassmannDerivation::parity() const {
  std::optional<Parity> p;
  for (const auto& f : f_) {
    if (f.is_zero()) continue;
    const auto fp = f.parity();
    if (!fp || (p && *p != *fp)) throw ParityError("derivation is not homogeneous");
    p = fp;
  }
  return p.value_or(Parity::Odd) + Parity::Odd;
}

bool GrassmannDerivation::is_zero() const {
  for (const auto& f : f_) {
    if (!f.is_zero()) return false;
  }
  return true;
}

GrassmannElement GrassmannDerivation::apply(const GrassmannElement& a) const {
  if (a.generators() != f_.size()) throw DimensionError("derivation applied to the wrong Grassmann algebra");
  GrassmannElement out(a.generators());
  for (std::size_t i = 0; i < f_.size(); ++i) {
    if (f_[i].is_zero()) continue;
    out += right_partial(a, i) * f_[i];
  }
  return out;
}

GrassmannDerivation bracket(const GrassmannDerivation& a, const GrassmannDerivation& b) {
  if (a.generators() != b.generators()) throw DimensionError("derivations of different Grassmann algebras");
  const Scalar s = koszul_sign(a.parity(), b.parity());
  std::vector<GrassmannElement> g;
  for (std::size_t i = 0; i < a.generators(); ++i) {
    g.push_back(b.apply(a.components()[i]) - a.apply(b.components()[i]) * s);
  }
  return GrassmannDerivation(std::move(g));
}

std::size_t GrassmannDerivationAlgebra::index_of(std::size_t i, std::uint32_t mask) const {
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (basis[b].first == i && basis[b].second == mask) return b;
  }
  throw DimensionError("no such derivation basis vector");
}

GrassmannDerivation GrassmannDerivationAlgebra::derivation(std::size_t b) const {
  return GrassmannDerivation::basis(generators, basis.at(b).first, basis.at(b).second);
}

Vector GrassmannDerivationAlgebra::coordinates(const GrassmannDerivation& d) const {
  Vector v(basis.size());
  for (std::size_t i = 0; i < d.components().size(); ++i) {
    for (const auto& [mask, c] : d.components()[i].terms()) v[index_of(i, mask)] = c;
  }
  return v;
}

GrassmannDerivationAlgebra grassmann_derivations(std::size_t n) {
  GrassmannElement probe(n);  // enforces the generator budget
  GrassmannDerivationAlgebra out;
  out.generators = n;
  const std::uint32_t masks = std::uint32_t{1} << n;
  std::vector<std::string> labels;
  std::size_t even = 0;
  for (Parity want : {Parity::Even, Parity::Odd}) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint32_t s = 0; s < masks; ++s) {
        if (mask_parity(s) + Parity::Odd != want) continue;
        out.basis.emplace_back(i, s);
        out.degree.push_back(std::popcount(s) - 1);
        labels.push_back("d" + std::to_string(i + 1) + "*" + monomial_word(s, n));
        if (want == Parity::Even) ++even;
      }
    }
  }
  out.algebra = LieSuperAlgebra(even, out.basis.size() - even, labels, "Der(Lambda(" + std::to_string(n) + "))");
  for (std::size_t a = 0; a < out.basis.size(); ++a) {
    for (std::size_t b = 0; b < out.basis.size(); ++b) {
      out.algebra.set_bracket(a, b, out.coordinates(bracket(out.derivation(a), out.derivation(b))));
    }
  }
  return out;
}

}  // namespace superlie
