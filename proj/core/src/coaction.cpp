#include "superlie/coaction.hpp"

#include <bit>
#include <map>

#include "superlie/errors.hpp"

namespace superlie {

Coaction::Coaction(CoactionData data) : data_(std::move(data)) {
  const std::size_t n = data_.x.shape().unipotent();
  if (data_.f.size() != n) throw PreconditionError("f matrix must be square of size l + k");
  for (const auto& row : data_.f) {
    if (row.size() != n) throw PreconditionError("f matrix must be square of size l + k");
    for (const auto& e : row) {
      if (!(e.shape() == data_.g.shape())) throw PreconditionError("f entries must live in K[G]");
    }
  }
  if (data_.characters.size() != data_.x.r()) throw PreconditionError("need f_i(t_a) for every torus generator");
  for (const auto& row : data_.characters) {
    if (row.size() != n) throw PreconditionError("need f_i(t_a) for every primitive generator");
    for (const auto& e : row) {
      if (!(e.shape() == data_.g.shape())) throw PreconditionError("f_i(t_a) must live in K[G]");
      if (!e.is_nilpotent()) {
        throw PreconditionError("f_i(t_a) = " + data_.g.format(e) + " is not nilpotent");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    HopfTensor img({data_.x.shape(), data_.g.shape()});
    for (std::size_t j = 0; j < n; ++j) img += HopfTensor::tensor(data_.x.generator(j), data_.f[j][i]);
    primitive_images_.push_back(std::move(img));
  }
}

HopfElement Coaction::character_value(std::size_t i, const std::vector<std::int64_t>& g) const {
  HopfElement out = data_.g.zero();
  for (std::size_t a = 0; a < g.size(); ++a) out += data_.characters[a][i] * Scalar(static_cast<long>(g[a]));
  return out;
}

HopfTensor Coaction::embed_left(const HopfElement& a) const { return HopfTensor::tensor(a, data_.g.one()); }

HopfTensor Coaction::apply_grouplike(const std::vector<std::int64_t>& g) const {
  const std::size_t n = data_.x.shape().unipotent();
  HopfTensor exponent({data_.x.shape(), data_.g.shape()});
  for (std::size_t i = 0; i < n; ++i) {
    exponent += HopfTensor::tensor(data_.x.generator(i), character_value(i, g));
  }
  // exp of a nilpotent even element; the series terminates
  HopfTensor sum = embed_left(data_.x.one());
  HopfTensor term = sum;
  for (long m = 1;; ++m) {
    term = term * exponent * (Scalar(1) / m);
    if (term.is_zero()) break;
    sum += term;
    if (m > 64) throw Error("exponential series did not terminate");
  }
  Monomial gm = data_.x.shape().one();
  gm.torus = g;
  return embed_left(data_.x.monomial(gm)) * sum;
}

HopfTensor Coaction::apply(const Monomial& m) const {
  HopfTensor out = apply_grouplike(m.torus);
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    for (std::uint32_t e = 0; e < m.exps[i]; ++e) out = out * primitive_images_[i];
  }
  return out;
}

HopfTensor Coaction::apply(const HopfElement& a) const {
  HopfTensor out({data_.x.shape(), data_.g.shape()});
  for (const auto& [m, c] : a.terms()) out += apply(m) * c;
  return out;
}

bool comodule_coassociative_on(const Coaction& rho, const HopfElement& a) {
  const HopfTensor once = rho.apply(a);
  const HopfTensor left = once.map_factor(0, {rho.data().x.shape(), rho.data().g.shape()},
                                          [&rho](const Monomial& m) { return rho.apply(m); });
  const HopfTensor right = apply_comultiplication(rho.data().g, once, 1);
  return left == right;
}

namespace {

bool even_part_in_odd_square(const AbelianHopfAlgebra& g, const HopfElement& e) {
  for (const auto& [m, c] : e.terms()) {
    if (std::popcount(g.shape().odd_mask(m)) < 2) return false;
  }
  return true;
}

}  // namespace

CoactionReport verify_coaction(const CoactionData& data, std::size_t d) {
  CoactionReport report;
  const AbelianHopfAlgebra& x = data.x;
  const AbelianHopfAlgebra& g = data.g;
  const std::size_t n = x.shape().unipotent();
  auto zparity = [&x](std::size_t i) { return i < x.l() ? Parity::Even : Parity::Odd; };
  auto fail = [&report](bool& flag, std::string msg) {
    flag = false;
    report.failures.push_back(std::move(msg));
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++report.checks;
      const auto p = data.f[i][j].parity();
      if (!p || (!data.f[i][j].is_zero() && *p != zparity(i) + zparity(j))) {
        fail(report.f_parities, "f" + std::to_string(i + 1) + std::to_string(j + 1) + " has the wrong parity");
      }
      HopfTensor expected({g.shape(), g.shape()});
      for (std::size_t t = 0; t < n; ++t) expected += HopfTensor::tensor(data.f[i][t], data.f[t][j]);
      if (!(g.comultiply(data.f[i][j]) == expected) || g.counit(data.f[i][j]) != (i == j ? 1 : 0)) {
        fail(report.f_comatrix, "f" + std::to_string(i + 1) + std::to_string(j + 1) +
                                    " violates Delta(f_ij) = sum f_it (x) f_tj or eps(f_ij) = delta_ij");
      }
    }
  }
  for (std::size_t a = 0; a < data.characters.size(); ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      const HopfElement& fi = data.characters[a][i];
      const auto p = fi.parity();
      if (!p || (!fi.is_zero() && *p != zparity(i))) {
        fail(report.f_parities, "f_" + std::to_string(i + 1) + "(t" + std::to_string(a + 1) + ") has the wrong parity");
      }
      if (!fi.is_nilpotent()) {
        fail(report.characters_nilpotent, "f_" + std::to_string(i + 1) + " is not nilpotent");
      }
      if (zparity(i) == Parity::Even && !even_part_in_odd_square(g, fi)) report.characters_in_odd_square = false;
    }
  }
  if (!report.ok()) return report;

  const Coaction rho(data);

  // generating set: primitive generators and torus generators with inverses
  std::vector<std::pair<std::string, HopfElement>> generators;
  for (std::size_t i = 0; i < n; ++i) generators.emplace_back(x.format(x.generator(i)), x.generator(i));
  for (std::size_t a = 0; a < x.r(); ++a) {
    generators.emplace_back(x.format(x.grouplike(a)), x.grouplike(a));
    generators.emplace_back(x.format(x.grouplike(a, -1)), x.grouplike(a, -1));
  }
  for (const auto& [name, a] : generators) {
    ++report.checks;
    if (!comodule_coassociative_on(rho, a)) {
      fail(report.comodule_coassociative, "comodule coassociativity fails on " + name);
    }
    const HopfTensor counit = apply_counit(g, rho.apply(a), 1);
    if (!(counit == HopfTensor::single(a))) fail(report.counit, "counit law fails on " + name);
  }

  for (std::size_t a = 0; a < x.r(); ++a) {
    std::vector<std::int64_t> t(x.r(), 0);
    t[a] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      ++report.checks;
      const HopfElement fi = rho.character_value(i, t);
      HopfTensor rhs = HopfTensor::tensor(fi, g.one());
      for (std::size_t j = 0; j < n; ++j) rhs += HopfTensor::tensor(data.f[i][j], rho.character_value(j, t));
      if (!(g.comultiply(fi) == rhs)) {
        fail(report.compatibility, "Delta_G(f_" + std::to_string(i + 1) + "(" + x.format(x.grouplike(a)) +
                                       ")) differs from f_i(g) (x) 1 + sum_j f_ij (x) f_j(g)");
      }
    }
  }

  const std::vector<Monomial> basis = x.basis_up_to(d);
  std::map<Monomial, HopfTensor> images;
  for (const auto& m : basis) images.emplace(m, rho.apply(m));
  for (const auto& ma : basis) {
    for (const auto& mb : basis) {
      if (x.shape().degree(ma) + x.shape().degree(mb) > d) continue;
      ++report.checks;
      const HopfElement a = x.monomial(ma);
      const HopfElement b = x.monomial(mb);
      if (!(rho.apply(a * b) == images.at(ma) * images.at(mb))) {
        fail(report.algebra_morphism, "rho*(ab) != rho*(a)rho*(b) for a = " + x.format(ma) + ", b = " + x.format(mb));
        return report;
      }
    }
  }
  return report;
}

}  // namespace superlie
