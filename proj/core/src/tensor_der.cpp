#include "superlie/tensor_der.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "superlie/errors.hpp"
#include "superlie/structure.hpp"

namespace superlie {

namespace {

using Key = std::tuple<std::size_t, int, std::size_t, std::uint32_t>;

Key key_of(const TensorDerBasisVector& b) {
  return {b.summand, static_cast<int>(b.sector), b.index, b.mask};
}

struct ChosenBasis {
  std::vector<SuperDerivation> ops;
  std::vector<std::string> labels;
  /// ad(x_k) in coordinates of ops, per basis vector x_k.
  std::vector<Vector> ad_coordinates;
  std::vector<std::optional<std::size_t>> ad_index;
};

/// Coordinates of an operator with respect to a fixed, not necessarily
/// echelon, basis of a subspace of gl(L).
class BasisSolver {
 public:
  BasisSolver(const LieSuperAlgebra& l, const std::vector<SuperDerivation>& ops)
      : span_(operator_span(l, ops)) {
    const std::size_t d = ops.size();
    RationalMatrix c(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      const Vector e = span_.coordinates(ops[k].matrix.flatten());
      for (std::size_t j = 0; j < d; ++j) c(j, k) = e[j];
    }
    to_chosen_ = d == 0 ? c : inverse(c);
  }

  Vector coordinates(const RationalMatrix& m) const { return to_chosen_ * span_.coordinates(m.flatten()); }
  const Subspace& span() const { return span_; }

 private:
  Subspace span_;
  RationalMatrix to_chosen_;
};

ChosenBasis choose_der_basis(const LieSuperAlgebra& l) {
  ChosenBasis out;
  const DerivationSpace der = derivation_space(l);
  const auto parity = operator_coordinate_parity(l);
  std::vector<Vector> flat;
  auto independent = [&](const RationalMatrix& m) {
    if (m.is_zero()) return false;
    return !Subspace::span(parity, flat).contains(m.flatten());
  };
  out.ad_index.assign(l.dim(), std::nullopt);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (std::size_t k = 0; k < l.dim(); ++k) {
      if (l.parity(k) != p) continue;
      const RationalMatrix ad = l.ad_basis(k);
      if (!independent(ad)) continue;
      out.ad_index[k] = out.ops.size();
      out.ops.push_back({p, ad});
      out.labels.push_back("ad(" + l.label(k) + ")");
      flat.push_back(ad.flatten());
    }
    std::size_t outer = 0;
    for (const auto& d : p == Parity::Even ? der.even : der.odd) {
      if (!independent(d.matrix)) continue;
      out.ops.push_back(d);
      out.labels.push_back(std::string(p == Parity::Even ? "out" : "outodd") + std::to_string(++outer));
      flat.push_back(d.matrix.flatten());
    }
  }
  const BasisSolver solver(l, out.ops);
  for (std::size_t k = 0; k < l.dim(); ++k) out.ad_coordinates.push_back(solver.coordinates(l.ad_basis(k)));
  return out;
}

}  // namespace

TensorDerAlgebra::TensorDerAlgebra(std::vector<TensorDerSummand> summands) : summands_(std::move(summands)) {
  std::vector<BasisSolver> solvers;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    const LieSuperAlgebra& l = summands_[i].algebra;
    const std::size_t n = summands_[i].generators;
    if (center(l).dim() != 0) {
      warnings_.push_back("summand " + std::to_string(i + 1) + " (" + l.name() +
                          ") has a nonzero center; ad is not injective on it");
    }
    ChosenBasis chosen = choose_der_basis(l);
    solvers.emplace_back(l, chosen.ops);
    der_.push_back(std::move(chosen.ops));
    der_labels_.push_back(std::move(chosen.labels));
    sym_.push_back(grassmann_derivations(n));
    tensors_.emplace_back(l, n);
    der_order_.push_back({});
    for (std::size_t k = 0; k < l.dim(); ++k) {
      der_order_.back().push_back(chosen.ad_index[k] ? *chosen.ad_index[k] : der_[i].size());
    }
    ad_coordinates_.push_back(std::move(chosen.ad_coordinates));
  }

  // Der(U) basis, even vectors first.
  std::vector<TensorDerBasisVector> all;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    const std::size_t n = summands_[i].generators;
    const std::uint32_t masks = std::uint32_t{1} << n;
    for (std::size_t d = 0; d < der_[i].size(); ++d) {
      for (std::uint32_t s = 0; s < masks; ++s) {
        all.push_back({i, TensorDerSector::DerTensor, d, s, der_[i][d].parity + mask_parity(s),
                       der_labels_[i][d] + "*" + monomial_word(s, n)});
      }
    }
    for (std::size_t b = 0; b < sym_[i].basis.size(); ++b) {
      const auto [j, s] = sym_[i].basis[b];
      all.push_back({i, TensorDerSector::IdTensor, j, s, mask_parity(s) + Parity::Odd,
                     "id*" + sym_[i].algebra.label(b)});
    }
  }
  if (summands_.size() > 1) {
    for (auto& b : all) b.label = "U" + std::to_string(b.summand + 1) + ":" + b.label;
  }
  std::stable_partition(all.begin(), all.end(), [](const auto& b) { return b.parity == Parity::Even; });
  basis_ = std::move(all);

  std::map<Key, std::size_t> position;
  std::vector<std::string> labels;
  std::size_t even = 0;
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    position[key_of(basis_[b])] = b;
    labels.push_back(basis_[b].label);
    if (basis_[b].parity == Parity::Even) ++even;
  }
  auto pos = [&position](std::size_t i, TensorDerSector sector, std::size_t index, std::uint32_t mask) {
    return position.at(Key{i, static_cast<int>(sector), index, mask});
  };

  std::string u_name;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    u_name += (i ? "+" : "") + summands_[i].algebra.name() + "*Lambda(" + std::to_string(summands_[i].generators) + ")";
  }
  algebra_ = LieSuperAlgebra(even, basis_.size() - even, labels, "Der(" + u_name + ")");

  for (std::size_t a = 0; a < basis_.size(); ++a) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const TensorDerBasisVector& x = basis_[a];
      const TensorDerBasisVector& y = basis_[b];
      if (x.summand != y.summand) continue;
      const std::size_t i = x.summand;
      const std::size_t n = summands_[i].generators;
      Vector v(basis_.size());
      if (x.sector == TensorDerSector::DerTensor && y.sector == TensorDerSector::DerTensor) {
        const int sign = merge_sign(x.mask, y.mask);
        if (sign == 0) continue;
        const SuperDerivation br = operator_bracket(der_[i][x.index], der_[i][y.index]);
        const Vector c = solvers[i].coordinates(br.matrix);
        const int total = sign * koszul_sign(mask_parity(x.mask), der_[i][y.index].parity);
        for (std::size_t d = 0; d < c.size(); ++d) {
          if (!is_zero(c[d])) v[pos(i, TensorDerSector::DerTensor, d, x.mask | y.mask)] = c[d] * total;
        }
      } else if (x.sector == TensorDerSector::DerTensor || y.sector == TensorDerSector::DerTensor) {
        const bool swapped = y.sector == TensorDerSector::DerTensor;
        const TensorDerBasisVector& dt = swapped ? y : x;
        const TensorDerBasisVector& it = swapped ? x : y;
        const GrassmannElement image =
            GrassmannDerivation::basis(n, it.index, it.mask).apply(GrassmannElement::monomial(n, dt.mask));
        Scalar factor = 1;
        if (swapped) factor = -koszul_sign(x.parity, y.parity);
        for (const auto& [mask, c] : image.terms()) {
          v[pos(i, TensorDerSector::DerTensor, dt.index, mask)] = c * factor;
        }
      } else {
        const GrassmannDerivation br = bracket(GrassmannDerivation::basis(n, x.index, x.mask),
                                               GrassmannDerivation::basis(n, y.index, y.mask));
        for (std::size_t j = 0; j < n; ++j) {
          for (const auto& [mask, c] : br.components()[j].terms()) {
            v[pos(i, TensorDerSector::IdTensor, j, mask)] = c;
          }
        }
      }
      algebra_.set_bracket(a, b, std::move(v));
    }
  }

  // U = sum_i U_i (x) Lambda(n_i), even basis vectors first.
  u_pos_.resize(summands_.size());
  std::vector<std::pair<std::size_t, std::size_t>> u_order;  // (summand, tensor index)
  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (std::size_t i = 0; i < summands_.size(); ++i) {
      u_pos_[i].resize(tensors_[i].dim());
      for (std::size_t t = 0; t < tensors_[i].dim(); ++t) {
        const std::size_t k = tensors_[i].basis_factor(t);
        if (summands_[i].algebra.parity(k) + mask_parity(tensors_[i].basis_mask(t)) != p) continue;
        u_pos_[i][t] = u_order.size();
        u_order.emplace_back(i, t);
      }
    }
  }
  std::vector<std::string> u_labels;
  std::size_t u_even = 0;
  std::vector<LieSuperAlgebra> materialized;
  for (const auto& t : tensors_) materialized.push_back(t.materialize());
  for (const auto& [i, t] : u_order) {
    std::string label = materialized[i].label(t);
    if (summands_.size() > 1) label = "U" + std::to_string(i + 1) + ":" + label;
    u_labels.push_back(label);
    if (materialized[i].parity(t) == Parity::Even) ++u_even;
  }
  u_ = LieSuperAlgebra(u_even, u_order.size() - u_even, u_labels, u_name);
  for (std::size_t a = 0; a < u_order.size(); ++a) {
    for (std::size_t b = 0; b < u_order.size(); ++b) {
      const auto [i, s] = u_order[a];
      const auto [j, t] = u_order[b];
      if (i != j || !materialized[i].has_bracket(s, t)) continue;
      const Vector c = materialized[i].basis_bracket(s, t);
      Vector v(u_order.size());
      for (std::size_t k = 0; k < c.size(); ++k) v[u_pos_[i][k]] = c[k];
      u_.set_bracket(a, b, std::move(v));
    }
  }

  // inner ideal: x_k (x) z^S  ->  ad(x_k) (x) z^S
  inner_indices_.assign(u_order.size(), std::nullopt);
  for (std::size_t a = 0; a < u_order.size(); ++a) {
    const auto [i, t] = u_order[a];
    const std::size_t k = tensors_[i].basis_factor(t);
    const std::uint32_t s = tensors_[i].basis_mask(t);
    Vector v(basis_.size());
    const Vector& c = ad_coordinates_[i][k];
    for (std::size_t d = 0; d < c.size(); ++d) {
      if (!is_zero(c[d])) v[pos(i, TensorDerSector::DerTensor, d, s)] = c[d];
    }
    if (der_order_[i][k] < der_[i].size()) inner_indices_[a] = pos(i, TensorDerSector::DerTensor, der_order_[i][k], s);
    inner_vectors_.push_back(std::move(v));
  }
  inner_ = span_in(algebra_, inner_vectors_);
}

std::vector<std::optional<std::size_t>> TensorDerAlgebra::inner_basis_indices() const { return inner_indices_; }

std::size_t TensorDerAlgebra::u_index(std::size_t summand, std::size_t k, std::uint32_t mask) const {
  return u_pos_.at(summand).at(tensors_.at(summand).basis_index(k, mask));
}

SuperDerivation TensorDerAlgebra::realize(std::size_t b) const {
  const TensorDerBasisVector& x = basis_.at(b);
  const std::size_t i = x.summand;
  const std::size_t n = summands_[i].generators;
  const LieSuperAlgebra& l = summands_[i].algebra;
  SuperDerivation out{x.parity, RationalMatrix(u_.dim(), u_.dim())};
  for (std::size_t t = 0; t < tensors_[i].dim(); ++t) {
    const std::size_t k = tensors_[i].basis_factor(t);
    const std::uint32_t s = tensors_[i].basis_mask(t);
    const std::size_t col = u_pos_[i][t];
    if (x.sector == TensorDerSector::DerTensor) {
      const int sign = merge_sign(s, x.mask);
      if (sign == 0) continue;
      const SuperDerivation& d = der_[i][x.index];
      const int total = sign * koszul_sign(mask_parity(s), d.parity);
      for (std::size_t r = 0; r < l.dim(); ++r) {
        const Scalar& c = d.matrix(r, k);
        if (!is_zero(c)) out.matrix(u_index(i, r, s | x.mask), col) += c * total;
      }
    } else {
      const GrassmannElement image =
          GrassmannDerivation::basis(n, x.index, x.mask).apply(GrassmannElement::monomial(n, s));
      for (const auto& [mask, c] : image.terms()) out.matrix(u_index(i, k, mask), col) += c;
    }
  }
  return out;
}

SuperDerivation TensorDerAlgebra::realize(const Vector& v) const {
  if (v.size() != basis_.size()) throw DimensionError("vector does not live in Der(U)");
  SuperDerivation out{Parity::Even, RationalMatrix(u_.dim(), u_.dim())};
  bool seen = false;
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (is_zero(v[b])) continue;
    if (seen && out.parity != basis_[b].parity) throw ParityError("realize expects a homogeneous vector");
    out.parity = basis_[b].parity;
    seen = true;
    out.matrix += realize(b).matrix * v[b];
  }
  return out;
}

std::vector<std::size_t> TensorDerAlgebra::degree_minus_one(std::size_t summand) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < summands_.at(summand).generators; ++j) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const auto& x = basis_[b];
      if (x.summand == summand && x.sector == TensorDerSector::IdTensor && x.index == j && x.mask == 0) {
        out.push_back(b);
      }
    }
  }
  return out;
}

TensorDerAlgebra tensor_der(std::vector<TensorDerSummand> summands) { return TensorDerAlgebra(std::move(summands)); }

KacReport kac_semisimple_check(const TensorDerAlgebra& der, const Subspace& h) {
  if (h.ambient_dim() != der.algebra().dim()) throw DimensionError("subspace does not live in Der(U)");
  const auto& inner = der.inner_vectors();
  for (std::size_t a = 0; a < inner.size(); ++a) {
    if (!h.contains(inner[a])) {
      throw PreconditionError("subspace does not contain the inner derivation ad(" + der.inner_algebra().label(a) +
                              ")");
    }
  }
  KacReport report;
  for (std::size_t i = 0; i < der.summands().size(); ++i) {
    const auto coords = der.degree_minus_one(i);
    std::vector<Vector> rows;
    for (const auto& v : h.basis()) {
      Vector p(coords.size());
      for (std::size_t c = 0; c < coords.size(); ++c) p[c] = v[coords[c]];
      rows.push_back(std::move(p));
    }
    const std::size_t r = coords.empty() ? 0 : rank_of(rows, coords.size());
    report.projection_rank.push_back(r);
    report.required_rank.push_back(coords.size());
    if (r != coords.size()) report.semisimple = false;
  }
  return report;
}

}  // namespace superlie
