#include "superlie/structure.hpp"

#include "superlie/errors.hpp"

namespace superlie {

namespace {

void check_ambient(const LieSuperAlgebra& l, const Subspace& s) {
  if (s.ambient_dim() != l.dim()) throw DimensionError("subspace does not live in this algebra");
}

}  // namespace

Subspace span_in(const LieSuperAlgebra& l, std::span<const Vector> vectors) {
  return Subspace::span(l.coordinate_parity(), vectors);
}

Subspace whole_of(const LieSuperAlgebra& l) { return Subspace::whole(l.coordinate_parity()); }

Subspace zero_of(const LieSuperAlgebra& l) { return Subspace(l.coordinate_parity()); }

Subspace even_part(const LieSuperAlgebra& l) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < l.even_dim(); ++i) units.push_back(unit_vector(l.dim(), i));
  return span_in(l, units);
}

Subspace bracket_span(const LieSuperAlgebra& l, const Subspace& a, const Subspace& b) {
  check_ambient(l, a);
  check_ambient(l, b);
  std::vector<Vector> out;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) {
      Vector v = l.bracket(x, y);
      if (!is_zero(v)) out.push_back(std::move(v));
    }
  }
  return span_in(l, out);
}

Subspace centralizer(const LieSuperAlgebra& l, const Subspace& s, const Subspace& within) {
  check_ambient(l, s);
  check_ambient(l, within);
  const std::size_t d = l.dim();
  const std::size_t w = within.dim();
  if (w == 0) return zero_of(l);
  // Unknown c in K^w; x = sum c_a w_a; conditions [x, s_b] = 0.
  RationalMatrix system(d * std::max<std::size_t>(s.dim(), 1), w);
  for (std::size_t b = 0; b < s.dim(); ++b) {
    for (std::size_t a = 0; a < w; ++a) {
      const Vector v = l.bracket(within.basis()[a], s.basis()[b]);
      for (std::size_t k = 0; k < d; ++k) system(b * d + k, a) = v[k];
    }
  }
  std::vector<Vector> sols;
  for (const auto& c : nullspace(system)) {
    Vector x(d);
    for (std::size_t a = 0; a < w; ++a) axpy(c[a], within.basis()[a], x);
    sols.push_back(std::move(x));
  }
  return span_in(l, sols);
}

Subspace centralizer(const LieSuperAlgebra& l, const Subspace& s) { return centralizer(l, s, whole_of(l)); }

Subspace center(const LieSuperAlgebra& l) { return centralizer(l, whole_of(l)); }

Subspace commutant(const LieSuperAlgebra& l) {
  const Subspace all = whole_of(l);
  return bracket_span(l, all, all);
}

std::vector<Subspace> derived_series(const LieSuperAlgebra& l) {
  std::vector<Subspace> series{commutant(l)};
  for (std::size_t step = 0; step <= l.dim() + 1; ++step) {
    Subspace next = bracket_span(l, series.back(), series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
  throw Error("derived series did not stabilize");
}

bool is_solvable(const LieSuperAlgebra& l) {
  const auto series = derived_series(l);
  if (l.dim() == 0) return true;
  return !series.empty() && series.back().dim() == 0;
}

bool is_subalgebra(const LieSuperAlgebra& l, const Subspace& s) {
  return s.contains(bracket_span(l, s, s));
}

bool is_ideal(const LieSuperAlgebra& l, const Subspace& s) {
  return s.contains(bracket_span(l, s, whole_of(l)));
}

LieSuperAlgebra restrict_to(const LieSuperAlgebra& l, const Subspace& s) {
  check_ambient(l, s);
  if (!is_subalgebra(l, s)) throw PreconditionError("subspace is not closed under the bracket");
  // Echelon basis is ordered by pivot, and pivots of even vectors sit in even
  // coordinates, so evens come first.
  std::vector<std::string> labels;
  for (const auto& b : s.basis()) labels.push_back(l.format(b));
  LieSuperAlgebra sub(s.even_dim(), s.odd_dim(), labels, l.name().empty() ? "" : l.name() + "|sub");
  for (std::size_t a = 0; a < s.dim(); ++a) {
    for (std::size_t b = 0; b < s.dim(); ++b) {
      sub.set_bracket(a, b, s.coordinates(l.bracket(s.basis()[a], s.basis()[b])));
    }
  }
  return sub;
}

LieSuperAlgebra quotient(const LieSuperAlgebra& l, const Subspace& s) {
  check_ambient(l, s);
  if (!is_ideal(l, s)) throw PreconditionError("quotient requires an ideal");
  const std::vector<std::size_t> keep = s.complement_coordinates();
  std::size_t even = 0;
  std::vector<std::string> labels;
  for (std::size_t c : keep) {
    if (l.parity(c) == Parity::Even) ++even;
    labels.push_back(l.label(c));
  }
  LieSuperAlgebra q(even, keep.size() - even, labels, l.name().empty() ? "" : l.name() + "/ideal");
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) {
      const Vector r = s.reduce(l.basis_bracket(keep[a], keep[b]));
      Vector v(keep.size());
      for (std::size_t c = 0; c < keep.size(); ++c) v[c] = r[keep[c]];
      q.set_bracket(a, b, std::move(v));
    }
  }
  return q;
}

LieSuperAlgebra direct_sum(const LieSuperAlgebra& a, const LieSuperAlgebra& b) {
  // position of each summand's basis vector in the sum
  std::vector<std::size_t> pa(a.dim());
  std::vector<std::size_t> pb(b.dim());
  const std::size_t even = a.even_dim() + b.even_dim();
  for (std::size_t i = 0; i < a.dim(); ++i) pa[i] = i < a.even_dim() ? i : even + (i - a.even_dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    pb[i] = i < b.even_dim() ? a.even_dim() + i : even + a.odd_dim() + (i - b.even_dim());
  }
  const std::size_t d = a.dim() + b.dim();
  std::vector<std::string> labels(d);
  for (std::size_t i = 0; i < a.dim(); ++i) labels[pa[i]] = a.label(i);
  for (std::size_t i = 0; i < b.dim(); ++i) labels[pb[i]] = b.label(i);
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (a.index_of(b.label(i))) labels[pb[i]] = b.label(i) + "'";
  }
  LieSuperAlgebra sum(even, a.odd_dim() + b.odd_dim(), labels, a.name() + "+" + b.name());
  auto embed = [d](const Vector& v, const std::vector<std::size_t>& pos) {
    Vector out(d);
    for (std::size_t k = 0; k < v.size(); ++k) out[pos[k]] = v[k];
    return out;
  };
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) sum.set_bracket(pa[i], pa[j], embed(a.basis_bracket(i, j), pa));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) sum.set_bracket(pb[i], pb[j], embed(b.basis_bracket(i, j), pb));
  }
  return sum;
}

RationalMatrix even_killing_form(const LieSuperAlgebra& l) {
  const std::size_t m = l.even_dim();
  std::vector<RationalMatrix> ads;
  for (std::size_t i = 0; i < m; ++i) {
    RationalMatrix a(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) a(k, j) = l.structure_constant(j, i, k);
    }
    ads.push_back(std::move(a));
  }
  RationalMatrix kf(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      kf(i, j) = (ads[i] * ads[j]).trace();
      kf(j, i) = kf(i, j);
    }
  }
  return kf;
}

Subspace even_radical(const LieSuperAlgebra& l) {
  const std::size_t m = l.even_dim();
  const Subspace l0 = even_part(l);
  const Subspace derived = bracket_span(l, l0, l0);
  const RationalMatrix kf = even_killing_form(l);
  // x in L_0 with B(x, w) = 0 for every basis vector w of [L_0, L_0]
  RationalMatrix system(std::max<std::size_t>(derived.dim(), 1), m);
  for (std::size_t r = 0; r < derived.dim(); ++r) {
    for (std::size_t i = 0; i < m; ++i) {
      Scalar acc = 0;
      for (std::size_t j = 0; j < m; ++j) acc += kf(i, j) * derived.basis()[r][j];
      system(r, i) = acc;
    }
  }
  std::vector<Vector> sols;
  for (const auto& c : nullspace(system)) {
    Vector x(l.dim());
    for (std::size_t i = 0; i < m; ++i) x[i] = c[i];
    sols.push_back(std::move(x));
  }
  return span_in(l, sols);
}

Subspace even_center(const LieSuperAlgebra& l) {
  const Subspace l0 = even_part(l);
  return centralizer(l, l0, l0);
}

}  // namespace superlie
