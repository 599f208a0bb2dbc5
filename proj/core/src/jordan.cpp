#include "superlie/jordan.hpp"

#include <bit>

#include "superlie/errors.hpp"

namespace superlie {

JordanSplit jordan_chevalley(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("Jordan-Chevalley decomposition needs a square matrix");
  const std::size_t d = m.rows();
  JordanSplit out;
  if (d == 0) {
    out.semisimple = m;
    out.nilpotent = m;
    return out;
  }
  const Polynomial chi = characteristic_polynomial(m);
  const Polynomial p = square_free_part(chi);
  const Polynomial dp = p.derivative();

  const std::size_t max_iterations = static_cast<std::size_t>(std::bit_width(d - 1)) + 1;
  Polynomial s = Polynomial::monomial(1) % chi;
  while (!compose_mod(p, s, chi).is_zero()) {
    if (out.iterations == max_iterations) {
      throw Error("Newton iteration for the semisimple part did not converge");
    }
    const Polynomial correction = compose_mod(p, s, chi) * inverse_mod(compose_mod(dp, s, chi), chi);
    s = (s - correction) % chi;
    ++out.iterations;
  }

  out.semisimple = s(m);
  out.nilpotent = m - out.semisimple;
  out.semisimple_polynomial = s;
  out.square_free = p;

  if (!(out.semisimple + out.nilpotent == m)) throw Error("Jordan split does not sum to the input");
  if (!commutator(out.semisimple, out.nilpotent).is_zero()) throw Error("Jordan parts do not commute");
  if (!power(out.nilpotent, d).is_zero()) throw Error("nilpotent part is not nilpotent");
  if (!p(out.semisimple).is_zero()) throw Error("square-free part does not annihilate the semisimple part");
  return out;
}

std::string_view to_string(AlgebraicityVerdict v) {
  switch (v) {
    case AlgebraicityVerdict::NotAlgebraic:
      return "NotAlgebraic";
    case AlgebraicityVerdict::SemisimpleCase:
      return "SemisimpleCase";
    case AlgebraicityVerdict::NilpotentCase:
      return "NilpotentCase";
  }
  return "unknown";
}

AlgebraicityVerdict one_dim_algebraicity(const RationalMatrix& m) {
  if (m.is_zero()) throw PreconditionError("the zero matrix spans no line");
  const JordanSplit split = jordan_chevalley(m);
  const bool has_s = !split.semisimple.is_zero();
  const bool has_n = !split.nilpotent.is_zero();
  if (has_s && has_n) return AlgebraicityVerdict::NotAlgebraic;
  return has_n ? AlgebraicityVerdict::NilpotentCase : AlgebraicityVerdict::SemisimpleCase;
}

}  // namespace superlie
