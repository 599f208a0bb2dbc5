#include "superlie/commutant_counterexample.hpp"

#include <optional>

#include "superlie/errors.hpp"
#include "superlie/random.hpp"

namespace superlie {

namespace {

SuperMatrix from_blocks(const SuperMatrix& a, const SuperMatrix& b) {
  SuperMatrix m(2, 2, a.generators());
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = a(i, j);
      m(i + 2, j + 2) = a(i, j);
      m(i, j + 2) = b(i, j);
      m(i + 2, j) = b(i, j);
    }
  }
  return m;
}

std::optional<QueerPoint> try_read(const SuperMatrix& m) {
  try {
    return QueerPoint::from_matrix(m);
  } catch (const Error&) {
    return std::nullopt;
  }
}

struct BlockProduct {
  SuperMatrix matrix;
  SuperMatrix direct;
};

BlockProduct multiply_both_ways(const QueerPoint& p, const QueerPoint& q) {
  const SuperMatrix a = p.block_a(), b = p.block_b(), a2 = q.block_a(), b2 = q.block_b();
  return {from_blocks(a * a2 + b * b2, a * b2 + b * a2), p.matrix() * q.matrix()};
}

BlockProduct invert_both_ways(const QueerPoint& p) {
  const SuperMatrix a_inv = p.block_a().inverse();
  return {from_blocks(a_inv, -(a_inv * a_inv * p.block_b())), p.matrix().inverse()};
}

bool is_even(const DualNumber& x) { return x.base.is_even() && x.eps0.is_even() && x.eps1.is_odd(); }

bool is_odd(const DualNumber& x) { return x.base.is_odd() && x.eps0.is_odd() && x.eps1.is_even(); }

}  // namespace

QueerPoint::QueerPoint(GrassmannElement a1, GrassmannElement a2, GrassmannElement t)
    : a1_(std::move(a1)), a2_(std::move(a2)), t_(std::move(t)) {
  if (a1_.generators() != a2_.generators() || a1_.generators() != t_.generators()) {
    throw DimensionError("point coordinates live in different Grassmann algebras");
  }
  if (!a1_.is_even() || !a2_.is_even()) throw ParityError("a1 and a2 must be even");
  if (!t_.is_odd()) throw ParityError("t must be odd");
  if (superlie::is_zero(a1_.body())) throw NotAUnitError("a1 must be a unit: " + a1_.to_string());
}

QueerPoint QueerPoint::identity(std::size_t generators) {
  return QueerPoint(GrassmannElement::one(generators), GrassmannElement(generators), GrassmannElement(generators));
}

QueerPoint QueerPoint::from_matrix(const SuperMatrix& m) {
  if (m.even_dim() != 2 || m.odd_dim() != 2) throw DimensionError("expected a GL(2|2) matrix");
  QueerPoint p = [&] {
    try {
      return QueerPoint(m(0, 0), m(0, 1), m(0, 2));
    } catch (const Error& e) {
      throw PreconditionError(std::string("matrix is not a point of the subgroup: ") + e.what());
    }
  }();
  if (!(p.matrix() == m)) throw PreconditionError("matrix is not a point of the subgroup");
  return p;
}

SuperMatrix QueerPoint::block_a() const {
  SuperMatrix a(2, 0, generators());
  a(0, 0) = a1_;
  a(0, 1) = a2_;
  a(1, 1) = a1_;
  return a;
}

SuperMatrix QueerPoint::block_b() const {
  SuperMatrix b(2, 0, generators());
  b(0, 0) = t_;
  b(0, 1) = (GrassmannElement::one(generators()) + a1_.inverse() * a2_) * t_;
  b(1, 1) = t_;
  return b;
}

SuperMatrix QueerPoint::matrix() const { return from_blocks(block_a(), block_b()); }

QueerPoint queer_multiply(const QueerPoint& p, const QueerPoint& q) {
  const BlockProduct r = multiply_both_ways(p, q);
  if (!(r.matrix == r.direct)) throw Error("block product disagrees with matrix multiplication");
  return QueerPoint::from_matrix(r.matrix);
}

QueerPoint queer_inverse(const QueerPoint& p) {
  const BlockProduct r = invert_both_ways(p);
  if (!(r.matrix == r.direct)) throw Error("block inverse disagrees with matrix inversion");
  return QueerPoint::from_matrix(r.matrix);
}

QueerPoint queer_commutator(const QueerPoint& p, const QueerPoint& q) {
  const std::size_t n = p.generators();
  const SuperMatrix e = SuperMatrix::identity(2, 0, n);
  const SuperMatrix a = e + Scalar(2) * (p.block_a().inverse() * q.block_a().inverse() * p.block_b() * q.block_b());
  return QueerPoint::from_matrix(from_blocks(a, SuperMatrix(2, 0, n)));
}

QueerPairCheck check_queer_pair(const QueerPoint& p, const QueerPoint& q) {
  QueerPairCheck check;
  const BlockProduct prod = multiply_both_ways(p, q);
  check.product_matches_matrix = prod.matrix == prod.direct;
  check.product_closed = try_read(prod.matrix).has_value();
  const BlockProduct inv = invert_both_ways(p);
  const BlockProduct inv_q = invert_both_ways(q);
  check.inverse_matches_matrix = inv.matrix == inv.direct && inv_q.matrix == inv_q.direct;
  const SuperMatrix commutator = p.matrix() * q.matrix() * inv.direct * inv_q.direct;
  check.commutator_matches = queer_commutator(p, q).matrix() == commutator;
  return check;
}

QueerPoint random_queer_point(std::size_t generators, std::mt19937_64& rng) {
  return QueerPoint(random_grassmann_unit(generators, rng), random_grassmann(generators, Parity::Even, rng),
                    random_grassmann(generators, Parity::Odd, rng));
}

bool in_queer_subgroup(const DualNumberPoint& p) {
  if (p.base().even_dim() != 2 || p.base().odd_dim() != 2) return false;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      if (!(p.entry(i, j) == p.entry(i + 2, j + 2)) || !(p.entry(i, j + 2) == p.entry(i + 2, j))) return false;
    }
  }
  const DualNumber a1 = p.entry(0, 0);
  const DualNumber a2 = p.entry(0, 1);
  const DualNumber t = p.entry(0, 2);
  if (!is_even(a1) || !is_even(a2) || !is_odd(t) || superlie::is_zero(a1.base.body())) return false;
  if (!p.entry(1, 0).is_zero() || !(p.entry(1, 1) == a1)) return false;
  if (!p.entry(1, 2).is_zero() || !(p.entry(1, 3) == t)) return false;
  const DualNumber one = DualNumber::constant(GrassmannElement::one(a1.base.generators()));
  return p.entry(0, 3) == (one + a1.inverse() * a2) * t;
}

QueerLieReport queer_lie() {
  QueerLieReport r;
  r.x = SuperMatrix::identity(2, 2, 0);
  r.y = SuperMatrix::elementary(2, 2, 0, 0, 1) + SuperMatrix::elementary(2, 2, 0, 2, 3);
  r.v = SuperMatrix(2, 2, 0);
  for (auto [i, j] : {std::pair{0, 2}, {0, 3}, {1, 3}, {2, 0}, {2, 1}, {3, 1}}) {
    r.v += SuperMatrix::elementary(2, 2, 0, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  r.xy = superbracket(r.x, r.y);
  r.xv = superbracket(r.x, r.v);
  r.yv = superbracket(r.y, r.v);
  r.vv = superbracket(r.v, r.v);
  r.relations_vanish = r.xy.is_zero() && r.xv.is_zero() && r.yv.is_zero();
  r.vv_is_2x_plus_4y = r.vv == Scalar(2) * r.x + Scalar(4) * r.y;
  r.x_tangent = in_queer_subgroup(DualNumberPoint::tangent(r.x));
  r.y_tangent = in_queer_subgroup(DualNumberPoint::tangent(r.y));
  r.v_tangent = in_queer_subgroup(DualNumberPoint::tangent(r.v));
  const RationalMatrix body = r.vv.body();
  r.a_even = RationalMatrix(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) r.a_even(i, j) = body(i, j);
  }
  r.split = jordan_chevalley(r.a_even);
  r.verdict = one_dim_algebraicity(r.a_even);
  return r;
}

LieSuperAlgebra make_queer_commutant_algebra() {
  LieSuperAlgebra l(2, 1, {"x", "y", "v"}, "queer-commutant");
  l.set_bracket(2, 2, Vector{2, 4, 0});
  return l;
}

CommutantCounterexample run_commutant_counterexample(std::size_t pairs, std::size_t generators, std::uint64_t seed) {
  CommutantCounterexample out;
  out.lie = queer_lie();
  out.generators = generators;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < pairs; ++n) {
    const QueerPoint p = random_queer_point(generators, rng);
    const QueerPoint q = random_queer_point(generators, rng);
    ++out.pairs;
    if (check_queer_pair(p, q).ok()) ++out.pairs_ok;
  }
  return out;
}

}  // namespace superlie
