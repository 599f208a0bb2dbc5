#pragma once

#include <cstddef>
#include <cstdint>

#include "superlie/supermatrix.hpp"

namespace superlie {

/// A point of GL(m|n)(Lambda(q)): the generic matrix c_ij evaluated at g.
class GLPoint {
 public:
  /// Throws ParityError unless the matrix is even and SingularError unless
  /// both diagonal blocks have invertible bodies.
  explicit GLPoint(SuperMatrix matrix);

  static GLPoint identity(std::size_t even_dim, std::size_t odd_dim, std::size_t generators);

  const SuperMatrix& matrix() const { return matrix_; }
  /// g composed with the antipode, read entrywise.
  const SuperMatrix& inverse_matrix() const { return inverse_; }
  GLPoint inverse() const { return GLPoint(inverse_); }

  friend GLPoint operator*(const GLPoint& a, const GLPoint& b) { return GLPoint(a.matrix_ * b.matrix_); }
  friend bool operator==(const GLPoint& a, const GLPoint& b) { return a.matrix_ == b.matrix_; }

 private:
  SuperMatrix matrix_;
  SuperMatrix inverse_;
};

/// g u g^{-1} for u in gl(m|n) (x) Lambda(q).
SuperMatrix adjoint_matrix(const GLPoint& g, const SuperMatrix& u);

// Functionals on m/m^2 valued in Lambda(q) are stored as the matrix of their
// values u(c_ij) = u(c_ij - delta_ij). A homogeneous functional of parity p has
// the same entry parities as a supermatrix of parity p.

/// The functional attached to a matrix: each parity-p part is multiplied on
/// the left by the parity matrix raised to p. The map is an involution and
/// turns the convolution bracket into the matrix superbracket.
SuperMatrix functional_from_matrix(const SuperMatrix& x);
SuperMatrix matrix_from_functional(const SuperMatrix& u);

/// (v (x) a)(f) = (-1)^{|a||f|} v(f) a for a scalar functional v and a
/// homogeneous a in Lambda(q).
SuperMatrix tensor_functional(const SuperMatrix& v, const GrassmannElement& a);

/// (u * w)(c_ij) = sum_k (-1)^{|w||c_ik|} u(c_ik) w(c_kj), from
/// Delta(c_ij) = sum_k c_ik (x) c_kj.
SuperMatrix convolution(const SuperMatrix& u, const SuperMatrix& w);

/// u * w - (-1)^{|u||w|} w * u, extended over homogeneous components.
SuperMatrix convolution_bracket(const SuperMatrix& u, const SuperMatrix& w);

/// (Ad(g)u)(f) = sum (-1)^{|u||f_1|} g(f_1) u(f_2) g(s(f_3)) evaluated on each c_ij.
SuperMatrix adjoint_hopf(const GLPoint& g, const SuperMatrix& u);

/// e1- and e0-coefficients of g (1 + e0 u0 + e1 u1) g^{-1} over the dual numbers.
SuperMatrix adjoint_dual_numbers(const GLPoint& g, const SuperMatrix& u);

struct AdjointCheckReport {
  std::size_t pairs = 0;
  std::size_t hopf_equals_matrix = 0;
  std::size_t hopf_equals_dual_numbers = 0;
  std::size_t bracket_equivariant = 0;
  bool ok() const {
    return pairs > 0 && hopf_equals_matrix == pairs && hopf_equals_dual_numbers == pairs && bracket_equivariant == pairs;
  }
};

/// Draws `pairs` seeded triples (g, u, v) in GL(m|n)(Lambda(q)) with homogeneous
/// u, v of random parity and compares the Hopf-side adjoint action against
/// conjugation; checks [Ad(g)u, Ad(g)v] = Ad(g)[u, v] with the convolution bracket.
AdjointCheckReport verify_adjoint_action(std::size_t even_dim, std::size_t odd_dim, std::size_t generators,
                                         std::size_t pairs, std::uint64_t seed);

}  // namespace superlie
