#include "superlie/nonalgebraic_subalgebra.hpp"

#include "superlie/structure.hpp"

namespace superlie {

NonAlgebraicExample build_nonalgebraic_example() {
  NonAlgebraicExample ex{tensor_der({{make_sl2(), 2}}), {}, false, {}, {}, false, {}, {}, {}, false, false, false};
  const TensorDerAlgebra& der = ex.der;
  const LieSuperAlgebra& d = der.algebra();
  auto at = [&d](const std::string& label) { return d.index_of(label).value(); };

  ex.delta = Vector(d.dim());
  ex.delta[at("id*d1*z1")] = 1;
  ex.delta[at("id*d1*z2")] = 1;
  ex.delta[at("id*d2*z2")] = 1;

  std::vector<Vector> gens = der.inner_vectors();
  gens.push_back(unit_vector(d.dim(), at("id*d1*1")));
  gens.push_back(unit_vector(d.dim(), at("id*d2*1")));
  gens.push_back(ex.delta);
  ex.h = span_in(d, gens);
  ex.h_is_subalgebra = is_subalgebra(d, ex.h);

  for (std::uint32_t mask : {1U, 2U}) {
    for (std::size_t k = 0; k < 3; ++k) ex.v_basis.push_back(der.u_index(0, k, mask));
  }
  const std::size_t vdim = ex.v_basis.size();

  // restriction of an operator on U to V, checking invariance
  auto restrict_to_v = [&](const RationalMatrix& m, bool& invariant) {
    RationalMatrix r(vdim, vdim);
    std::vector<bool> in_v(der.inner_algebra().dim(), false);
    for (auto b : ex.v_basis) in_v[b] = true;
    for (std::size_t c = 0; c < vdim; ++c) {
      const std::size_t col = ex.v_basis[c];
      for (std::size_t row = 0; row < m.rows(); ++row) {
        if (!in_v[row] && !is_zero(m(row, col))) invariant = false;
      }
      for (std::size_t rr = 0; rr < vdim; ++rr) r(rr, c) = m(ex.v_basis[rr], col);
    }
    return r;
  };

  bool invariant = true;
  ex.op = restrict_to_v(der.realize(ex.delta).matrix, invariant);
  std::vector<Vector> images;
  for (const auto& v : ex.h.basis_of_parity(Parity::Even)) {
    images.push_back(restrict_to_v(der.realize(v).matrix, invariant).flatten());
  }
  ex.v_invariant_under_h0 = invariant;
  ex.h0_image = Subspace::span(std::vector<Parity>(vdim * vdim, Parity::Even), images);

  ex.split = jordan_chevalley(ex.op);
  ex.semisimple_in_image = ex.h0_image.contains(ex.split.semisimple.flatten());
  ex.nilpotent_in_image = ex.h0_image.contains(ex.split.nilpotent.flatten());
  ex.not_algebraic = !(ex.semisimple_in_image && ex.nilpotent_in_image);
  return ex;
}

}  // namespace superlie
