#include "superlie/derivations.hpp"

#include "superlie/errors.hpp"

namespace superlie {

namespace {

bool operator_is_homogeneous(const LieSuperAlgebra& l, const SuperDerivation& d) {
  for (std::size_t r = 0; r < l.dim(); ++r) {
    for (std::size_t c = 0; c < l.dim(); ++c) {
      if (l.parity(r) + l.parity(c) != d.parity && !is_zero(d.matrix(r, c))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_derivation(const LieSuperAlgebra& l, const SuperDerivation& d) {
  const std::size_t n = l.dim();
  if (d.matrix.rows() != n || d.matrix.cols() != n) throw DimensionError("operator does not act on this algebra");
  if (!operator_is_homogeneous(l, d)) return false;
  std::vector<Vector> image(n);
  for (std::size_t j = 0; j < n; ++j) image[j] = d.matrix.column(j);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector xi = unit_vector(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = d.matrix * l.basis_bracket(i, j);
      lhs = lhs - l.bracket(xi, image[j]);
      const Scalar s = koszul_sign(d.parity, l.parity(j));
      axpy(-s, l.bracket(image[i], unit_vector(n, j)), lhs);
      if (!is_zero(lhs)) return false;
    }
  }
  return true;
}

SuperDerivation operator_bracket(const SuperDerivation& a, const SuperDerivation& b) {
  SuperDerivation out;
  out.parity = a.parity + b.parity;
  out.matrix = b.matrix * a.matrix;
  if (koszul_sign(a.parity, b.parity) > 0) {
    out.matrix -= a.matrix * b.matrix;
  } else {
    out.matrix += a.matrix * b.matrix;
  }
  return out;
}

std::vector<Parity> operator_coordinate_parity(const LieSuperAlgebra& l) {
  std::vector<Parity> p;
  p.reserve(l.dim() * l.dim());
  for (std::size_t r = 0; r < l.dim(); ++r) {
    for (std::size_t c = 0; c < l.dim(); ++c) p.push_back(l.parity(r) + l.parity(c));
  }
  return p;
}

Subspace operator_span(const LieSuperAlgebra& l, std::span<const SuperDerivation> ops) {
  std::vector<Vector> flat;
  flat.reserve(ops.size());
  for (const auto& op : ops) flat.push_back(op.matrix.flatten());
  return Subspace::span(operator_coordinate_parity(l), flat);
}

std::vector<SuperDerivation> DerivationSpace::all() const {
  std::vector<SuperDerivation> out = even;
  out.insert(out.end(), odd.begin(), odd.end());
  return out;
}

DerivationSpace derivation_space(const LieSuperAlgebra& l) {
  const std::size_t n = l.dim();
  DerivationSpace out;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    // unknowns: entries D(r, c) with |r| + |c| = p
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    std::vector<std::size_t> unknown_of(n * n, n * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (l.parity(r) + l.parity(c) != p) continue;
        unknown_of[r * n + c] = unknowns.size();
        unknowns.emplace_back(r, c);
      }
    }
    if (unknowns.empty()) continue;
    // Row (i, j, r): sum_k c_ijk D(r,k) - sum_l D(l,j) c_ilr - s_j sum_l D(l,i) c_ljr = 0
    RationalMatrix system(n * n * n, unknowns.size());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t base = (i * n + j) * n;
        const Vector cij = l.basis_bracket(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (is_zero(cij[k])) continue;
          for (std::size_t r = 0; r < n; ++r) {
            const std::size_t u = unknown_of[r * n + k];
            if (u < unknowns.size()) system(base + r, u) += cij[k];
          }
        }
        for (std::size_t m = 0; m < n; ++m) {
          const std::size_t u = unknown_of[m * n + j];
          if (u == unknowns.size() || u == n * n) continue;
          if (!l.has_bracket(i, m)) continue;
          const Vector cim = l.basis_bracket(i, m);
          for (std::size_t r = 0; r < n; ++r) system(base + r, u) -= cim[r];
        }
        const Scalar s = koszul_sign(p, l.parity(j));
        for (std::size_t m = 0; m < n; ++m) {
          const std::size_t u = unknown_of[m * n + i];
          if (u == n * n) continue;
          if (!l.has_bracket(m, j)) continue;
          const Vector cmj = l.basis_bracket(m, j);
          for (std::size_t r = 0; r < n; ++r) system(base + r, u) -= s * cmj[r];
        }
      }
    }
    for (const auto& sol : nullspace(system)) {
      SuperDerivation d;
      d.parity = p;
      d.matrix = RationalMatrix(n, n);
      for (std::size_t u = 0; u < unknowns.size(); ++u) d.matrix(unknowns[u].first, unknowns[u].second) = sol[u];
      (p == Parity::Even ? out.even : out.odd).push_back(std::move(d));
    }
  }
  return out;
}

std::vector<SuperDerivation> inner_derivations(const LieSuperAlgebra& l) {
  std::vector<SuperDerivation> out;
  for (std::size_t i = 0; i < l.dim(); ++i) out.push_back({l.parity(i), l.ad_basis(i)});
  return out;
}

Subspace inner_derivation_span(const LieSuperAlgebra& l) {
  const auto inner = inner_derivations(l);
  return operator_span(l, inner);
}

std::pair<std::size_t, std::size_t> outer_quotient_dim(const LieSuperAlgebra& l) {
  const DerivationSpace der = derivation_space(l);
  const Subspace inner = inner_derivation_span(l);
  return {der.even.size() - inner.even_dim(), der.odd.size() - inner.odd_dim()};
}

DerivationAlgebra derivation_algebra(const LieSuperAlgebra& l) {
  const auto all = derivation_space(l).all();
  DerivationAlgebra out;
  out.span = operator_span(l, all);
  const std::size_t n = l.dim();
  // echelon order interleaves parities; list the even basis vectors first
  std::vector<std::size_t> order;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (std::size_t b = 0; b < out.span.dim(); ++b) {
      if (out.span.basis_parity(b) == p) order.push_back(b);
    }
  }
  for (std::size_t b : order) {
    out.basis.push_back({out.span.basis_parity(b), RationalMatrix::unflatten(out.span.basis()[b], n, n)});
  }
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < out.basis.size(); ++b) labels.push_back("D" + std::to_string(b + 1));
  out.algebra = LieSuperAlgebra(out.span.even_dim(), out.span.odd_dim(), labels, "Der(" + l.name() + ")");
  for (std::size_t a = 0; a < out.basis.size(); ++a) {
    for (std::size_t b = 0; b < out.basis.size(); ++b) {
      const SuperDerivation br = operator_bracket(out.basis[a], out.basis[b]);
      const Vector c = out.span.coordinates(br.matrix.flatten());
      Vector v(order.size());
      for (std::size_t k = 0; k < order.size(); ++k) v[k] = c[order[k]];
      out.algebra.set_bracket(a, b, std::move(v));
    }
  }
  return out;
}

}  // namespace superlie
