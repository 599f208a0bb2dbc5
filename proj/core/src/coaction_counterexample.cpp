#include "superlie/coaction_counterexample.hpp"

#include <map>

#include "superlie/linalg.hpp"
#include "superlie/subspace.hpp"

namespace superlie {

CoactionData coaction_counterexample_data() {
  AbelianHopfAlgebra x(1, 1, 2);
  AbelianHopfAlgebra g = FreeHopfSuperalgebra({{"u", GeneratorKind::OddPrimitive}, {"v", GeneratorKind::OddPrimitive}}).hopf();
  const HopfElement u = g.named("u");
  const HopfElement v = g.named("v");
  const HopfElement one = g.one();
  const HopfElement zero = g.zero();
  CoactionData data{x, g, {{one, -v, u}, {zero, one, zero}, {zero, zero, one}}, {{u * v, u, v}}};
  return data;
}

namespace {

const std::vector<Parity> kWParity = {Parity::Even, Parity::Odd, Parity::Odd};

/// rho*(t) - t (x) 1 grouped by K[G] monomial.
std::map<Monomial, HopfElement> coefficients_by_g(const HopfTensor& t, const HopfShape& xs) {
  std::map<Monomial, HopfElement> out;
  for (const auto& [key, c] : t.terms()) {
    auto it = out.try_emplace(key[1], HopfElement(xs)).first;
    it->second.add_term(key[0], c);
  }
  return out;
}

/// z-degree-1 part of a coefficient t*(w + ...), as a vector in W.
Vector linear_part(const HopfElement& e) {
  Vector w(3);
  for (const auto& [m, c] : e.terms()) {
    std::uint32_t deg = 0;
    for (auto x : m.exps) deg += x;
    if (deg != 1) continue;
    for (std::size_t i = 0; i < 3; ++i) {
      if (m.exps[i] == 1) w[i] += c;
    }
  }
  return w;
}

/// The algebra map K[X] -> K[X] killing V: z_i goes to its remainder modulo V.
HopfTensor reduce_modulo(const AbelianHopfAlgebra& x, const Subspace& v, const HopfTensor& t) {
  std::vector<HopfElement> images;
  for (std::size_t i = 0; i < 3; ++i) {
    const Vector r = v.reduce(unit_vector(3, i));
    HopfElement img = x.zero();
    for (std::size_t c = 0; c < 3; ++c) img += x.generator(c) * r[c];
    images.push_back(std::move(img));
  }
  return t.map_factor(0, {x.shape()}, [&](const Monomial& m) {
    Monomial torus = x.shape().one();
    torus.torus = m.torus;
    HopfElement out = x.monomial(torus);
    for (std::size_t i = 0; i < 3; ++i) out = out * images[i].power(m.exps[i]);
    return HopfTensor::single(out);
  });
}

SubgroupExclusionReport check_subgroups(const AbelianHopfAlgebra& x, const HopfTensor& residue) {
  SubgroupExclusionReport report;
  std::vector<Vector> linear;
  for (const auto& [m, coeff] : coefficients_by_g(residue, x.shape())) linear.push_back(linear_part(coeff));
  const std::size_t linear_rank = rank_of(linear, 3);

  const std::vector<std::pair<long, long>> directions = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 3}, {-3, 5}};
  const Vector z1 = unit_vector(3, 0);
  struct Family {
    std::string name;
    bool with_z1;
    int odd;  // 0: none, 1: line a*z2 + b*z3, 2: all odd
  };
  const std::vector<Family> families = {{"V = 0", false, 0},
                                        {"V = <z1>", true, 0},
                                        {"V = <a*z2 + b*z3>", false, 1},
                                        {"V = <z1, a*z2 + b*z3>", true, 1},
                                        {"V = <z2, z3>", false, 2}};
  report.ok = true;
  for (const Family& fam : families) {
    const bool with_z1 = fam.with_z1;
    SubspaceFamilyCheck check;
    check.family = fam.name;
    check.parametrized = fam.odd == 1;
    check.max_dim = (with_z1 ? 1 : 0) + static_cast<std::size_t>(fam.odd);
    check.linear_rank = linear_rank;
    check.symbolic_nonzero = linear_rank > check.max_dim;
    check.concrete_nonzero = true;
    auto members = std::vector<std::vector<Vector>>{};
    if (fam.odd == 1) {
      for (const auto& [a, b] : directions) {
        std::vector<Vector> gens = {Vector{0, a, b}};
        if (with_z1) gens.push_back(z1);
        members.push_back(gens);
        check.directions.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    } else {
      std::vector<Vector> gens;
      if (with_z1) gens.push_back(z1);
      if (fam.odd == 2) {
        gens.push_back(unit_vector(3, 1));
        gens.push_back(unit_vector(3, 2));
      }
      members.push_back(gens);
    }
    for (const auto& gens : members) {
      const Subspace v = Subspace::span(kWParity, gens);
      if (reduce_modulo(x, v, residue).is_zero()) check.concrete_nonzero = false;
    }
    report.ok = report.ok && check.symbolic_nonzero && check.concrete_nonzero;
    report.families.push_back(std::move(check));
  }
  const Subspace whole = Subspace::whole(kWParity);
  report.whole_space_residue_zero = reduce_modulo(x, whole, residue).is_zero();
  report.ok = report.ok && report.whole_space_residue_zero;
  return report;
}

TrivialKernelReport check_kernel(const AbelianHopfAlgebra& g, const HopfTensor& residue) {
  TrivialKernelReport report;
  const std::vector<Monomial> basis = g.basis_up_to(2);
  std::map<Monomial, std::size_t> index;
  std::vector<Parity> parity;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    index[basis[b]] = b;
    parity.push_back(g.shape().parity(basis[b]));
  }
  auto coords = [&](const HopfElement& e) {
    Vector v(basis.size());
    for (const auto& [m, c] : e.terms()) v[index.at(m)] = c;
    return v;
  };
  const HopfElement u = g.named("u");
  const HopfElement v = g.named("v");
  const std::vector<Vector> fs = {coords(u * v), coords(u), coords(v)};
  report.coefficient_rank = rank_of(fs, basis.size());

  std::vector<Parity> pair_parity;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) pair_parity.push_back(parity[a] + parity[b]);
  }
  auto pair_coords = [&](const HopfTensor& t) {
    Vector w(basis.size() * basis.size());
    for (const auto& [key, c] : t.terms()) w[index.at(key[0]) * basis.size() + index.at(key[1])] = c;
    return w;
  };

  report.ok = report.coefficient_rank == 3;
  const std::vector<std::pair<std::string, HopfElement>> lines = {{"u", u}, {"v", v}, {"u + v", u + v}};
  for (const auto& [name, ell] : lines) {
    HopfIdealCheck check;
    check.generator = name;
    std::vector<HopfElement> ideal;
    std::vector<Vector> ideal_coords;
    for (const auto& m : basis) {
      HopfElement e = ell * g.monomial(m);
      if (e.is_zero()) continue;
      ideal_coords.push_back(coords(e));
      ideal.push_back(std::move(e));
    }
    const Subspace i_space = Subspace::span(parity, ideal_coords);
    std::vector<Vector> sides;
    for (const auto& e : ideal) {
      for (const auto& m : basis) {
        sides.push_back(pair_coords(HopfTensor::tensor(e, g.monomial(m))));
        sides.push_back(pair_coords(HopfTensor::tensor(g.monomial(m), e)));
      }
    }
    const Subspace delta_target = Subspace::span(pair_parity, sides);
    check.is_hopf_ideal = true;
    for (const auto& e : ideal) {
      if (!delta_target.contains(pair_coords(g.comultiply(e))) || !is_zero(g.counit(e)) ||
          !i_space.contains(coords(g.antipode(e)))) {
        check.is_hopf_ideal = false;
      }
    }
    check.contains_u = i_space.contains(coords(u));
    check.contains_v = i_space.contains(coords(v));
    check.contains_uv = i_space.contains(coords(u * v));

    // reduce the K[G] factor modulo the ideal
    check.residue_nonzero = false;
    std::map<Monomial, Vector> by_x;
    for (const auto& [key, c] : residue.terms()) {
      auto it = by_x.try_emplace(key[0], Vector(basis.size())).first;
      it->second[index.at(key[1])] += c;
    }
    for (const auto& [m, w] : by_x) {
      if (!is_zero(i_space.reduce(w))) check.residue_nonzero = true;
    }
    report.ok = report.ok && check.is_hopf_ideal && !(check.contains_u && check.contains_v && check.contains_uv) &&
                check.residue_nonzero;
    report.ideals.push_back(std::move(check));
  }
  return report;
}

}  // namespace

CoactionCounterexample run_coaction_counterexample(std::size_t truncation) {
  CoactionCounterexample out{coaction_counterexample_data(), {}, {}, {}, false, {}, {}, false};
  const AbelianHopfAlgebra& x = out.data.x;
  const AbelianHopfAlgebra& g = out.data.g;
  out.axioms = verify_coaction(out.data, truncation);

  const Coaction rho(out.data);
  const HopfElement t = x.grouplike(0);
  out.rho_t = rho.apply(t);
  out.rho_t_text = format_tensor(out.rho_t, {&x, &g});

  HopfTensor low({x.shape(), g.shape()});
  for (const auto& [key, c] : out.rho_t.terms()) {
    std::uint32_t deg = 0;
    for (auto e : key[0].exps) deg += e;
    if (deg <= 1) low.add_term(key, c);
  }
  const HopfElement u = g.named("u");
  const HopfElement v = g.named("v");
  const HopfTensor expected = HopfTensor::tensor(t, g.one()) + HopfTensor::tensor(t * x.generator(0), u * v) +
                              HopfTensor::tensor(t * x.generator(1), u) + HopfTensor::tensor(t * x.generator(2), v);
  out.rho_t_linear_part_matches = low == expected;

  const HopfTensor residue = out.rho_t - HopfTensor::tensor(t, g.one());
  out.subgroups = check_subgroups(x, residue);
  out.kernel = check_kernel(g, residue);
  out.ok = out.axioms.ok() && out.rho_t_linear_part_matches && out.subgroups.ok && out.kernel.ok;
  return out;
}

}  // namespace superlie
