// Runs every acceptance criterion once and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "superlie/algebra_file.hpp"
#include "superlie/derivations.hpp"
#include "superlie/hopf_abelian.hpp"
#include "superlie/jordan.hpp"
#include "superlie/quasireductive.hpp"
#include "superlie/random.hpp"
#include "superlie/structure.hpp"
#include "superlie/supergroup_points.hpp"
#include "superlie/tensor_der.hpp"

namespace {

using namespace superlie;
using cli::Json;

struct Check {
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string fixture(const std::string& file) { return std::string(SUPERLIE_FIXTURE_DIR) + "/" + file; }

std::string run_cli(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "superlie");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Json run_json(const std::string& name, int& code) {
  return Json::parse(run_cli({"--format", "json", "counterexample", name}, code));
}

void commutant_counterexample(Check& c) {
  int code = 0;
  const std::string text = run_cli({"counterexample", "sec10"}, code);
  c.require(code == 0, "exit code " + std::to_string(code));
  for (const char* line : {"[x,y] = 0", "[x,v] = 0", "[y,v] = 0", "[v,v] = 2x + 4y", "verdict: NotAlgebraic"}) {
    c.require(text.find(line) != std::string::npos, std::string("missing '") + line + "'");
  }
  const Json j = run_json("sec10", code);
  c.require(j["relations_hold"].get<bool>(), "relations");
  const Json& law = j["group_law"];
  c.require(law["pairs"].get<int>() >= 20, "fewer than 20 pairs");
  c.require(law["generators"].get<int>() <= 6, "more than 6 generators");
  c.require(law["pairs_verified"] == law["pairs"], "group law pair failed");
  for (const auto& [k, v] : j["tangent_vectors_in_L"].items()) c.require(v.get<bool>(), "tangent " + k);
}

void coaction_counterexample(Check& c) {
  int code = 0;
  const Json j = run_json("sec8", code);
  c.require(code == 0, "exit code " + std::to_string(code));
  c.require(j["truncation"] == 4, "truncation");
  for (const char* key : {"f_parities", "f_comatrix", "characters_nilpotent", "comodule_coassociative", "counit",
                          "compatibility", "algebra_morphism"}) {
    c.require(j["coaction"][key].get<bool>(), std::string("coaction ") + key);
  }
  c.require(j["rho(t)_linear_part"].get<bool>(), "rho(t)");
  c.require(j["subgroups"]["families"].size() == 5, "family count");
  for (const auto& f : j["subgroups"]["families"]) {
    c.require(f["residue_nonzero_for_all"].get<bool>(), "family " + f["family"].get<std::string>());
  }
  c.require(j["subgroups"]["whole_space_residue_zero"].get<bool>(), "whole space");
  c.require(j["subgroups"]["no_proper_invariant_subgroup"].get<bool>(), "subgroups");
  c.require(j["kernel"]["kernel_trivial"].get<bool>(), "Hopf ideals");
  c.require(j["verdict"] == "Verified", "verdict");
}

void nonalgebraic_subalgebra(Check& c) {
  int code = 0;
  const Json j = run_json("notalg", code);
  c.require(code == 0, "exit code " + std::to_string(code));
  c.require(j["h_dim"] == 15, "dim H");
  c.require(j["h_is_subalgebra"].get<bool>(), "closure");
  c.require(j["v_basis"].size() == 6, "dim V");
  c.require(!(j["semisimple_in_image"].get<bool>() && j["nilpotent_in_image"].get<bool>()), "both parts in image");
  c.require(j["verdict"] == "NotAlgebraic", "verdict");
}

void derivation_equivalence(Check& c) {
  for (std::size_t n : {0U, 1U, 2U}) {
    const TensorDerAlgebra der = tensor_der({{make_sl2(), n}});
    std::vector<SuperDerivation> ops;
    for (std::size_t b = 0; b < der.algebra().dim(); ++b) ops.push_back(der.realize(b));
    const Subspace assembled = operator_span(der.inner_algebra(), ops);
    const Subspace direct = operator_span(der.inner_algebra(), derivation_space(der.inner_algebra()).all());
    c.require(assembled == direct, "span mismatch for n = " + std::to_string(n));
    c.require(assembled.dim() == der.algebra().dim(), "assembled basis dependent for n = " + std::to_string(n));
    if (n == 2) c.require(direct.dim() == 20, "dim Der = " + std::to_string(direct.dim()));
  }
}

void kac_criterion(Check& c) {
  int code = 0;
  run_cli({"kac", fixture("sl2.alg"), fixture("sl2_sym2_all.sub")}, code);
  c.require(code == 0, "Der(U) not semisimple");
  run_cli({"kac", fixture("sl2.alg"), fixture("sl2_sym2_nonalgebraic.sub")}, code);
  c.require(code == 0, "15-dimensional H not semisimple");
  run_cli({"kac", fixture("sl2.alg"), fixture("sl2_sym2_inner.sub")}, code);
  c.require(code == 1, "inner ideal reported semisimple");
}

void jordan_suite(Check& c) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const RationalMatrix m = random_rational_matrix(n, n, rng);
    const JordanSplit j = jordan_chevalley(m);
    const std::string tag = "matrix " + std::to_string(trial);
    c.require(j.semisimple + j.nilpotent == m, tag + ": S + N");
    c.require(commutator(j.semisimple, j.nilpotent).is_zero(), tag + ": [S,N]");
    c.require(power(j.nilpotent, n).is_zero(), tag + ": N nilpotent");
    c.require(square_free_part(j.square_free) == j.square_free && j.square_free(j.semisimple).is_zero(),
              tag + ": minpoly(S) square-free");
    RationalMatrix p;
    do {
      p = random_rational_matrix(n, n, rng, 2);
    } while (is_zero(determinant(p)));
    const RationalMatrix p_inv = inverse(p);
    const JordanSplit conj = jordan_chevalley(p * m * p_inv);
    c.require(conj.semisimple == p * j.semisimple * p_inv && conj.nilpotent == p * j.nilpotent * p_inv,
              tag + ": conjugation");
  }
}

void hopf_suite(Check& c) {
  for (std::size_t r = 0; r <= 1; ++r) {
    for (std::size_t l = 0; l <= 2; ++l) {
      for (std::size_t k = 0; k <= 3; ++k) {
        const HopfReport report = verify_hopf(AbelianHopfAlgebra(r, l, k), 4);
        c.require(report.ok(), "(" + std::to_string(r) + "," + std::to_string(l) + "," + std::to_string(k) +
                                   "): " + report.failure);
      }
    }
  }
  std::mt19937_64 rng(7);
  AbelianHopfAlgebra mutated(rng() % 2, rng() % 3, 2 + rng() % 2);
  std::vector<std::uint32_t> lambda(mutated.l() + mutated.k());
  std::vector<std::uint32_t> mu(lambda.size());
  lambda[mutated.l()] = lambda[mutated.l() + 1] = 1;
  mu[mutated.l() + 1] = 1;
  mutated.corrupt_sign(lambda, mu);
  const HopfReport report = verify_hopf(mutated, 4);
  c.require(!report.ok() && report.witness.has_value(), "mutation not detected");
  if (report.witness) std::printf("    mutation witness: %s\n", mutated.format(*report.witness).c_str());
}

void adjoint_action(Check& c) {
  const AdjointCheckReport r = verify_adjoint_action(1, 1, 4, 50, 3);
  c.require(r.pairs == 50, "pair count");
  c.require(r.hopf_equals_matrix == 50, "Hopf Ad vs conjugation");
  c.require(r.hopf_equals_dual_numbers == 50, "Hopf Ad vs dual numbers");
  c.require(r.bracket_equivariant == 50, "bracket equivariance");
}

void structural_suite(Check& c) {
  struct Expected {
    const char* name;
    bool quasireductive;
  };
  for (const Expected& e : {Expected{"gl11", true}, Expected{"gl22", true}, Expected{"sl2", true},
                            Expected{"queer", true}, Expected{"nonabelian2", false}}) {
    const std::string tag = e.name;
    const LieSuperAlgebra l = load_algebra(fixture(tag + ".alg"));
    c.require(validate(l).valid, tag + ": validate");
    const Subspace z = center(l);
    const Subspace d = commutant(l);
    c.require(is_ideal(l, z), tag + ": center is an ideal");
    c.require(is_ideal(l, d), tag + ": commutant is an ideal");
    const auto series = derived_series(l);
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
      c.require(series[i].contains(series[i + 1]) && series[i].dim() > series[i + 1].dim(),
                tag + ": derived series not decreasing");
    }
    for (const Subspace& ideal : {z, d}) {
      const LieSuperAlgebra q = quotient(l, ideal);
      c.require(q.dim() + ideal.dim() == l.dim() && q.even_dim() + ideal.even_dim() == l.even_dim(),
                tag + ": quotient dimension");
      c.require(validate(q).valid, tag + ": quotient validate");
    }
    c.require(is_quasireductive(l).quasireductive == e.quasireductive, tag + ": quasireductivity");
  }
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"commutant counterexample (counterexample sec10)", 5, commutant_counterexample},
      {"coaction counterexample (counterexample sec8)", 10, coaction_counterexample},
      {"non-algebraic subalgebra (counterexample notalg)", 10, nonalgebraic_subalgebra},
      {"derivation oracle equivalence", 60, derivation_equivalence},
      {"Kac semisimplicity criterion", 60, kac_criterion},
      {"Jordan-Chevalley suite", 30, jordan_suite},
      {"Hopf axiom suite", 60, hopf_suite},
      {"adjoint action on GL(1|1)", 60, adjoint_action},
      {"structural invariant suite", 60, structural_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& cr = criteria[i];
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > cr.limit_seconds) {
      check.failures.push_back("took " + std::to_string(seconds) + " s, limit " + std::to_string(cr.limit_seconds));
    }
    const bool ok = check.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s [%zu] %s (%.3f s)\n", ok ? "PASS" : "FAIL", i + 1, cr.name, seconds);
    for (const auto& f : check.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
