#include "superlie/tensor_grassmann.hpp"

#include "superlie/errors.hpp"

namespace superlie {

std::string monomial_word(std::uint32_t mask, std::size_t generators, const std::string& prefix) {
  if (mask == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < generators; ++i) {
    if (mask & (std::uint32_t{1} << i)) out += prefix + std::to_string(i + 1);
  }
  return out;
}

TensorGrassmann::TensorGrassmann(LieSuperAlgebra l, std::size_t generators) : l_(std::move(l)), q_(generators) {
  GrassmannElement probe(generators);  // enforces the generator budget
  const std::uint32_t masks = std::uint32_t{1} << q_;
  position_.resize(l_.dim() * masks);
  for (Parity want : {Parity::Even, Parity::Odd}) {
    for (std::size_t i = 0; i < l_.dim(); ++i) {
      for (std::uint32_t s = 0; s < masks; ++s) {
        if (l_.parity(i) + mask_parity(s) != want) continue;
        position_[(i << q_) | s] = index_.size();
        index_.emplace_back(i, s);
      }
    }
  }
}

TensorElement TensorGrassmann::zero() const { return TensorElement(l_.dim(), GrassmannElement(q_)); }

TensorElement TensorGrassmann::pure(const Vector& x, const GrassmannElement& a) const {
  if (x.size() != l_.dim()) throw DimensionError("vector does not match the Lie superalgebra");
  if (a.generators() != q_) throw DimensionError("Grassmann coefficient has the wrong generator count");
  TensorElement t = zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_zero(x[i])) t[i] = a * x[i];
  }
  return t;
}

TensorElement TensorGrassmann::pure(std::size_t i, const GrassmannElement& a) const {
  return pure(unit_vector(l_.dim(), i), a);
}

std::optional<Parity> TensorGrassmann::parity(const TensorElement& t) const {
  bool even = true;
  bool odd = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const bool e = l_.parity(i) == Parity::Even ? t[i].is_even() : t[i].is_odd();
    const bool o = l_.parity(i) == Parity::Even ? t[i].is_odd() : t[i].is_even();
    even = even && e;
    odd = odd && o;
  }
  if (even) return Parity::Even;
  if (odd) return Parity::Odd;
  return std::nullopt;
}

TensorElement TensorGrassmann::bracket(const TensorElement& a, const TensorElement& b) const {
  if (a.size() != l_.dim() || b.size() != l_.dim()) throw DimensionError("tensor element has the wrong length");
  TensorElement out = zero();
  for (std::size_t i = 0; i < l_.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (Parity pa : {Parity::Even, Parity::Odd}) {
      const GrassmannElement ai = a[i].part(pa);
      if (ai.is_zero()) continue;
      for (std::size_t j = 0; j < l_.dim(); ++j) {
        if (b[j].is_zero() || !l_.has_bracket(i, j)) continue;
        GrassmannElement prod = ai * b[j];
        if (prod.is_zero()) continue;
        prod *= Scalar(koszul_sign(pa, l_.parity(j)));
        const Vector c = l_.basis_bracket(i, j);
        for (std::size_t k = 0; k < l_.dim(); ++k) {
          if (!is_zero(c[k])) out[k] += prod * c[k];
        }
      }
    }
  }
  return out;
}

std::size_t TensorGrassmann::basis_index(std::size_t i, std::uint32_t mask) const {
  if (i >= l_.dim() || (mask >> q_) != 0) throw DimensionError("tensor basis index out of range");
  return position_[(i << q_) | mask];
}

Vector TensorGrassmann::coordinates(const TensorElement& t) const {
  Vector v(dim());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (const auto& [mask, c] : t[i].terms()) v[basis_index(i, mask)] = c;
  }
  return v;
}

TensorElement TensorGrassmann::from_coordinates(const Vector& v) const {
  if (v.size() != dim()) throw DimensionError("coordinate vector has the wrong length");
  TensorElement t = zero();
  for (std::size_t b = 0; b < dim(); ++b) {
    if (!is_zero(v[b])) t[index_[b].first] += GrassmannElement::monomial(q_, index_[b].second, v[b]);
  }
  return t;
}

LieSuperAlgebra TensorGrassmann::materialize() const {
  std::vector<std::string> labels;
  std::size_t even = 0;
  for (const auto& [i, s] : index_) {
    labels.push_back(l_.label(i) + "*" + monomial_word(s, q_));
    if (l_.parity(i) + mask_parity(s) == Parity::Even) ++even;
  }
  LieSuperAlgebra m(even, dim() - even, labels, l_.name() + "*Lambda(" + std::to_string(q_) + ")");
  for (std::size_t a = 0; a < dim(); ++a) {
    const auto [i, s] = index_[a];
    for (std::size_t b = 0; b < dim(); ++b) {
      const auto [j, t] = index_[b];
      if (!l_.has_bracket(i, j)) continue;
      const int sign = merge_sign(s, t);
      if (sign == 0) continue;
      const int total = sign * koszul_sign(mask_parity(s), l_.parity(j));
      const Vector c = l_.basis_bracket(i, j);
      Vector v(dim());
      for (std::size_t k = 0; k < l_.dim(); ++k) {
        if (!is_zero(c[k])) v[basis_index(k, s | t)] = c[k] * total;
      }
      m.set_bracket(a, b, std::move(v));
    }
  }
  return m;
}

std::string TensorGrassmann::format(const TensorElement& t) const {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += l_.label(i) + "*(" + t[i].to_string() + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace superlie
