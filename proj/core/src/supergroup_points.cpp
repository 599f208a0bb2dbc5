#include "superlie/supergroup_points.hpp"

#include <random>

#include "superlie/dual_numbers.hpp"
#include "superlie/errors.hpp"
#include "superlie/random.hpp"

namespace superlie {

namespace {

void check_same_shape(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.even_dim() != b.even_dim() || a.odd_dim() != b.odd_dim() || a.generators() != b.generators()) {
    throw DimensionError("functionals on different groups or coefficient algebras");
  }
}

int sign_of(Parity a, Parity b) { return (is_odd(a) && is_odd(b)) ? -1 : 1; }

SuperMatrix convolution_homogeneous(const SuperMatrix& u, const SuperMatrix& w, Parity w_parity) {
  SuperMatrix out(u.even_dim(), u.odd_dim(), u.generators());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      GrassmannElement value(u.generators());
      for (std::size_t k = 0; k < u.size(); ++k) {
        GrassmannElement term = u(i, k) * w(k, j);
        if (sign_of(w_parity, u.block_parity(i, k)) < 0) term = -term;
        value += term;
      }
      out(i, j) = std::move(value);
    }
  }
  return out;
}

SuperMatrix adjoint_hopf_homogeneous(const GLPoint& g, const SuperMatrix& u, Parity u_parity) {
  const SuperMatrix& gm = g.matrix();
  const SuperMatrix& gs = g.inverse_matrix();
  SuperMatrix out(u.even_dim(), u.odd_dim(), u.generators());
  // Delta^2(c_ij) = sum_{k,l} c_ik (x) c_kl (x) c_lj.
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      GrassmannElement value(u.generators());
      for (std::size_t k = 0; k < u.size(); ++k) {
        if (gm(i, k).is_zero()) continue;
        GrassmannElement left = gm(i, k);
        if (sign_of(u_parity, u.block_parity(i, k)) < 0) left = -left;
        for (std::size_t l = 0; l < u.size(); ++l) value += left * u(k, l) * gs(l, j);
      }
      out(i, j) = std::move(value);
    }
  }
  return out;
}

}  // namespace

GLPoint::GLPoint(SuperMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_even()) throw ParityError("a point of GL(m|n) is an even supermatrix");
  inverse_ = matrix_.inverse();
}

GLPoint GLPoint::identity(std::size_t even_dim, std::size_t odd_dim, std::size_t generators) {
  return GLPoint(SuperMatrix::identity(even_dim, odd_dim, generators));
}

SuperMatrix adjoint_matrix(const GLPoint& g, const SuperMatrix& u) {
  check_same_shape(g.matrix(), u);
  return g.matrix() * u * g.inverse_matrix();
}

SuperMatrix functional_from_matrix(const SuperMatrix& x) {
  const SuperMatrix pi = parity_matrix(x.even_dim(), x.odd_dim(), x.generators());
  return x.part(Parity::Even) + pi * x.part(Parity::Odd);
}

SuperMatrix matrix_from_functional(const SuperMatrix& u) { return functional_from_matrix(u); }

SuperMatrix tensor_functional(const SuperMatrix& v, const GrassmannElement& a) {
  if (v.generators() != 0) throw DimensionError("tensor_functional expects a scalar functional");
  const auto pa = a.parity();
  if (!pa) throw ParityError("coefficient is not homogeneous");
  SuperMatrix out(v.even_dim(), v.odd_dim(), a.generators());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      GrassmannElement value = a * v(i, j).body();
      if (sign_of(*pa, v.block_parity(i, j)) < 0) value = -value;
      out(i, j) = std::move(value);
    }
  }
  return out;
}

SuperMatrix convolution(const SuperMatrix& u, const SuperMatrix& w) {
  check_same_shape(u, w);
  return convolution_homogeneous(u, w.part(Parity::Even), Parity::Even) +
         convolution_homogeneous(u, w.part(Parity::Odd), Parity::Odd);
}

SuperMatrix convolution_bracket(const SuperMatrix& u, const SuperMatrix& w) {
  check_same_shape(u, w);
  SuperMatrix out(u.even_dim(), u.odd_dim(), u.generators());
  for (Parity pu : {Parity::Even, Parity::Odd}) {
    const SuperMatrix up = u.part(pu);
    for (Parity pw : {Parity::Even, Parity::Odd}) {
      const SuperMatrix wp = w.part(pw);
      const SuperMatrix forward = convolution_homogeneous(up, wp, pw);
      const SuperMatrix backward = convolution_homogeneous(wp, up, pu);
      out += sign_of(pu, pw) < 0 ? forward + backward : forward - backward;
    }
  }
  return out;
}

SuperMatrix adjoint_hopf(const GLPoint& g, const SuperMatrix& u) {
  check_same_shape(g.matrix(), u);
  return adjoint_hopf_homogeneous(g, u.part(Parity::Even), Parity::Even) +
         adjoint_hopf_homogeneous(g, u.part(Parity::Odd), Parity::Odd);
}

SuperMatrix adjoint_dual_numbers(const GLPoint& g, const SuperMatrix& u) {
  check_same_shape(g.matrix(), u);
  const SuperMatrix zero(u.even_dim(), u.odd_dim(), u.generators());
  const DualNumberPoint lifted(g.matrix(), zero, zero);
  const DualNumberPoint lifted_inverse(g.inverse_matrix(), zero, zero);
  const DualNumberPoint conj = lifted * DualNumberPoint::tangent(u) * lifted_inverse;
  return conj.eps0() + conj.eps1();
}

AdjointCheckReport verify_adjoint_action(std::size_t even_dim, std::size_t odd_dim, std::size_t generators,
                                         std::size_t pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  AdjointCheckReport report;
  for (std::size_t n = 0; n < pairs; ++n) {
    const GLPoint g(random_invertible_supermatrix(even_dim, odd_dim, generators, rng, 2));
    const Parity pu = coin(rng) ? Parity::Odd : Parity::Even;
    const Parity pv = coin(rng) ? Parity::Odd : Parity::Even;
    const SuperMatrix u = random_supermatrix(even_dim, odd_dim, generators, pu, rng, 2);
    const SuperMatrix v = random_supermatrix(even_dim, odd_dim, generators, pv, rng, 2);
    ++report.pairs;
    const SuperMatrix ad_u = adjoint_hopf(g, u);
    if (ad_u == functional_from_matrix(adjoint_matrix(g, matrix_from_functional(u)))) ++report.hopf_equals_matrix;
    if (ad_u == adjoint_dual_numbers(g, u)) ++report.hopf_equals_dual_numbers;
    if (convolution_bracket(ad_u, adjoint_hopf(g, v)) == adjoint_hopf(g, convolution_bracket(u, v))) {
      ++report.bracket_equivariant;
    }
  }
  return report;
}

}  // namespace superlie
