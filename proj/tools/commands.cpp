#include "commands.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "superlie/algebra_file.hpp"
#include "superlie/coaction_counterexample.hpp"
#include "superlie/commutant_counterexample.hpp"
#include "superlie/derivations.hpp"
#include "superlie/errors.hpp"
#include "superlie/jordan.hpp"
#include "superlie/lie_superalgebra.hpp"
#include "superlie/nonalgebraic_subalgebra.hpp"
#include "superlie/quasireductive.hpp"
#include "superlie/structure.hpp"
#include "superlie/tensor_der.hpp"

namespace superlie::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json matrix_rows(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string row;
    for (std::size_t c = 0; c < m.cols(); ++c) row += (c ? " " : "") + to_string(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json subspace_json(const LieSuperAlgebra& l, const Subspace& s) {
  Json out;
  out["dim"] = s.dim();
  out["even_dim"] = s.even_dim();
  out["odd_dim"] = s.odd_dim();
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(l.format(v));
  out["basis"] = basis;
  return out;
}

Json algebra_header(const LieSuperAlgebra& l) {
  Json out;
  out["name"] = l.name();
  out["even_dim"] = l.even_dim();
  out["odd_dim"] = l.odd_dim();
  return out;
}

Json validation_json(const LieSuperAlgebra& l, const ValidationReport& v) {
  Json out;
  out["valid"] = v.valid;
  if (!v.valid) {
    out["violation"] = std::string(to_string(*v.kind));
    Json witness = Json::array({l.label(v.i), l.label(v.j)});
    if (*v.kind == ViolationKind::Jacobi) witness.push_back(l.label(v.k));
    out["witness"] = witness;
    out["message"] = v.message;
  }
  return out;
}

Result begin(const std::string& command, const std::string& argument) {
  Result r;
  r.report["command"] = command;
  if (!argument.empty()) r.report["input"] = argument;
  return r;
}

/// Loads and validates; on failure the result already carries exit code 1.
std::optional<LieSuperAlgebra> load_valid(const std::filesystem::path& file, Result& r) {
  LieSuperAlgebra l = load_algebra(file);
  r.report["algebra"] = algebra_header(l);
  const ValidationReport v = validate(l);
  r.report["validation"] = validation_json(l, v);
  if (!v.valid) {
    r.exit_code = kMathFailure;
    return std::nullopt;
  }
  return l;
}

std::string linear_combination(const std::vector<std::pair<Scalar, std::string>>& terms) {
  std::string out;
  for (const auto& [c, name] : terms) {
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    const Scalar magnitude = negative ? Scalar(-c) : c;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += (magnitude == 1 ? std::string() : to_string(magnitude)) + name;
  }
  return out.empty() ? "0" : out;
}

Result coaction_report(const Options& opts) {
  Result r = begin("counterexample", "sec8");
  const CoactionCounterexample c = run_coaction_counterexample(opts.truncation);
  Json& rep = r.report;
  rep["group"] = "G = Lambda(u, v), u and v odd primitive";
  rep["space"] = "X = G_m x G_a x (G_a^-)^2 with coordinates t, z1 | z2, z3";
  rep["characters"] = Json::array({"f1 = uv", "f2 = u", "f3 = v"});
  rep["f_matrix"] = Json::array({"1 -v u", "0 1 0", "0 0 1"});
  rep["truncation"] = opts.truncation;
  Json axioms;
  axioms["f_parities"] = c.axioms.f_parities;
  axioms["f_comatrix"] = c.axioms.f_comatrix;
  axioms["characters_nilpotent"] = c.axioms.characters_nilpotent;
  axioms["comodule_coassociative"] = c.axioms.comodule_coassociative;
  axioms["counit"] = c.axioms.counit;
  axioms["compatibility"] = c.axioms.compatibility;
  axioms["algebra_morphism"] = c.axioms.algebra_morphism;
  axioms["checks"] = c.axioms.checks;
  if (!c.axioms.failures.empty()) axioms["failures"] = c.axioms.failures;
  rep["coaction"] = axioms;
  rep["rho(t)"] = c.rho_t_text;
  rep["rho(t)_linear_part"] = c.rho_t_linear_part_matches;
  Json families = Json::array();
  for (const auto& f : c.subgroups.families) {
    Json fam;
    fam["family"] = f.family;
    fam["max_dim"] = f.max_dim;
    fam["linear_rank"] = f.linear_rank;
    fam["residue_nonzero_for_all"] = f.symbolic_nonzero;
    if (f.parametrized) fam["directions"] = f.directions;
    fam["residue_nonzero_at_samples"] = f.concrete_nonzero;
    families.push_back(fam);
  }
  Json subgroups;
  subgroups["families"] = families;
  subgroups["whole_space_residue_zero"] = c.subgroups.whole_space_residue_zero;
  subgroups["no_proper_invariant_subgroup"] = c.subgroups.ok;
  rep["subgroups"] = subgroups;
  Json kernel;
  kernel["rank_of_uv_u_v"] = c.kernel.coefficient_rank;
  Json ideals = Json::array();
  for (const auto& i : c.kernel.ideals) {
    Json ideal;
    ideal["generator"] = i.generator;
    ideal["hopf_ideal"] = i.is_hopf_ideal;
    ideal["contains"] = Json::array();
    if (i.contains_u) ideal["contains"].push_back("u");
    if (i.contains_v) ideal["contains"].push_back("v");
    if (i.contains_uv) ideal["contains"].push_back("uv");
    ideal["residue_nonzero"] = i.residue_nonzero;
    ideals.push_back(ideal);
  }
  kernel["ideals"] = ideals;
  kernel["kernel_trivial"] = c.kernel.ok;
  rep["kernel"] = kernel;
  rep["verdict"] = c.ok ? "Verified" : "Failed";
  r.exit_code = c.ok ? kPass : kMathFailure;
  return r;
}

Result commutant_report(const Options& opts) {
  Result r = begin("counterexample", "sec10");
  constexpr std::size_t kPairs = 24;
  constexpr std::size_t kGenerators = 6;
  const CommutantCounterexample c = run_commutant_counterexample(kPairs, kGenerators, opts.seed);
  const QueerLieReport& lie = c.lie;
  Json& rep = r.report;
  rep["group"] = "(A|B) in GL(2|2), A = [[a1, a2], [0, a1]], B = [[t, (1 + a1^-1 a2) t], [0, t]]";
  rep["generators"] = Json::array({"x = (E|0)", "y = (E12|0)", "v = (0|E+E12)"});
  auto in_xy = [&](const SuperMatrix& m) {
    const Scalar cx = m(0, 0).body();
    const Scalar cy = m(0, 1).body();
    if (!(m == cx * lie.x + cy * lie.y)) return std::string("outside span{x, y}");
    return linear_combination({{cx, "x"}, {cy, "y"}});
  };
  Json relations = Json::array();
  relations.push_back("[x,y] = " + in_xy(lie.xy));
  relations.push_back("[x,v] = " + in_xy(lie.xv));
  relations.push_back("[y,v] = " + in_xy(lie.yv));
  relations.push_back("[v,v] = " + in_xy(lie.vv));
  rep["relations"] = relations;
  rep["relations_hold"] = lie.relations_vanish && lie.vv_is_2x_plus_4y;
  Json tangent;
  tangent["1 + e0 x"] = lie.x_tangent;
  tangent["1 + e0 y"] = lie.y_tangent;
  tangent["1 + e1 v"] = lie.v_tangent;
  rep["tangent_vectors_in_L"] = tangent;
  Json group;
  group["generators"] = c.generators;
  group["seed"] = c.seed;
  group["pairs"] = c.pairs;
  group["pairs_verified"] = c.pairs_ok;
  group["checks"] = "block product and inverse against 4x4 arithmetic, closure, commutator (E + 2A^-1A'^-1BB'|0)";
  rep["group_law"] = group;
  Json a;
  a["element"] = "a = [v,v]";
  a["matrix"] = matrix_rows(lie.a_even);
  a["semisimple"] = matrix_rows(lie.split.semisimple);
  a["nilpotent"] = matrix_rows(lie.split.nilpotent);
  rep["jordan"] = a;
  rep["verdict"] = std::string(to_string(lie.verdict));
  r.exit_code = c.ok() ? kPass : kMathFailure;
  return r;
}

Result nonalgebraic_report(const Options&) {
  Result r = begin("counterexample", "notalg");
  const NonAlgebraicExample e = build_nonalgebraic_example();
  Json& rep = r.report;
  rep["algebra"] = "Der(sl2 (x) Lambda(2))";
  rep["der_dim"] = e.der.algebra().dim();
  rep["delta"] = "d1*z1 + d1*z2 + d2*z2";
  rep["h_dim"] = e.h.dim();
  rep["h_even_dim"] = e.h.even_dim();
  rep["h_is_subalgebra"] = e.h_is_subalgebra;
  Json v = Json::array();
  for (auto i : e.v_basis) v.push_back(e.der.inner_algebra().label(i));
  rep["v_basis"] = v;
  rep["v_invariant_under_h0"] = e.v_invariant_under_h0;
  rep["operator"] = matrix_rows(e.op);
  rep["semisimple_part"] = matrix_rows(e.split.semisimple);
  rep["nilpotent_part"] = matrix_rows(e.split.nilpotent);
  rep["h0_image_dim"] = e.h0_image.dim();
  rep["semisimple_in_image"] = e.semisimple_in_image;
  rep["nilpotent_in_image"] = e.nilpotent_in_image;
  rep["verdict"] = e.not_algebraic ? "NotAlgebraic" : "Inconclusive";
  const bool ok = e.h.dim() == 15 && e.h_is_subalgebra && e.v_invariant_under_h0 && e.not_algebraic;
  r.exit_code = ok ? kPass : kMathFailure;
  return r;
}

void render_text(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& value = it.value();
    if (value.is_object()) {
      os << pad << it.key() << ":\n";
      render_text(value, indent + 2, os);
    } else if (value.is_array()) {
      os << pad << it.key() << ":";
      if (value.empty()) os << " []";
      os << '\n';
      for (const auto& item : value) {
        if (item.is_object()) {
          os << pad << "  -\n";
          render_text(item, indent + 4, os);
        } else {
          os << pad << "  " << (item.is_string() ? item.get<std::string>() : item.dump()) << '\n';
        }
      }
    } else {
      os << pad << it.key() << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

Result input_error(const std::string& command, const std::string& argument, const std::string& message) {
  Result r = begin(command, argument);
  r.exit_code = kInputError;
  r.report["error"] = argument.empty() ? message : argument + ": " + message;
  return r;
}

template <class F>
Result guarded(const std::string& command, const std::string& argument, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return input_error(command, argument, e.what());
  } catch (const BudgetError& e) {
    return input_error(command, argument, e.what());
  }
}

}  // namespace

Result cmd_validate(const std::filesystem::path& file, const Options&) {
  return guarded("validate", file.string(), [&] {
    Result r = begin("validate", file.string());
    const auto start = Clock::now();
    load_valid(file, r);
    r.report["elapsed_ms"] = elapsed_ms(start);
    return r;
  });
}

Result cmd_analyze(const std::filesystem::path& file, const Options&) {
  return guarded("analyze", file.string(), [&] {
    Result r = begin("analyze", file.string());
    const auto start = Clock::now();
    if (const auto l = load_valid(file, r)) {
      r.report["center"] = subspace_json(*l, center(*l));
      r.report["commutant"] = subspace_json(*l, commutant(*l));
      Json series = Json::array();
      for (const auto& d : derived_series(*l)) series.push_back(d.dim());
      r.report["derived_series_dims"] = series;
      r.report["solvable"] = is_solvable(*l);
      r.report["even_radical"] = subspace_json(*l, even_radical(*l));
      r.report["even_center"] = subspace_json(*l, even_center(*l));
      const QuasireductiveCertificate q = is_quasireductive(*l);
      Json qr;
      qr["quasireductive"] = q.quasireductive;
      qr["radical_is_center"] = q.radical_is_center;
      qr["center_acts_semisimply"] = q.center_acts_semisimply;
      qr["reason"] = q.reason;
      if (!q.witness.empty()) qr["witness"] = q.witness;
      r.report["quasireductivity"] = qr;
    }
    r.report["elapsed_ms"] = elapsed_ms(start);
    return r;
  });
}

Result cmd_derivations(const std::filesystem::path& file, const Options&) {
  return guarded("derivations", file.string(), [&] {
    Result r = begin("derivations", file.string());
    const auto start = Clock::now();
    if (const auto l = load_valid(file, r)) {
      const DerivationAlgebra d = derivation_algebra(*l);
      const Subspace inner = inner_derivation_span(*l);
      const auto [outer_even, outer_odd] = outer_quotient_dim(*l);
      Json der;
      der["dim"] = d.algebra.dim();
      der["even_dim"] = d.algebra.even_dim();
      der["odd_dim"] = d.algebra.odd_dim();
      r.report["derivations"] = der;
      Json in;
      in["dim"] = inner.dim();
      in["even_dim"] = inner.even_dim();
      in["odd_dim"] = inner.odd_dim();
      r.report["inner"] = in;
      r.report["outer_even_dim"] = outer_even;
      r.report["outer_odd_dim"] = outer_odd;
      const ValidationReport v = validate(d.algebra);
      r.report["derivation_algebra_valid"] = v.valid;
      if (!v.valid) r.exit_code = kMathFailure;
    }
    r.report["elapsed_ms"] = elapsed_ms(start);
    return r;
  });
}

Result cmd_jordan(const std::filesystem::path& file, const Options&) {
  return guarded("jordan", file.string(), [&] {
    Result r = begin("jordan", file.string());
    const auto start = Clock::now();
    const RationalMatrix m = load_matrix(file);
    const JordanSplit s = jordan_chevalley(m);
    r.report["matrix"] = matrix_rows(m);
    r.report["semisimple"] = matrix_rows(s.semisimple);
    r.report["nilpotent"] = matrix_rows(s.nilpotent);
    r.report["semisimple_polynomial"] = s.semisimple_polynomial.to_string();
    r.report["square_free_part"] = s.square_free.to_string();
    r.report["newton_iterations"] = s.iterations;
    if (!m.is_zero()) r.report["line_verdict"] = std::string(to_string(one_dim_algebraicity(m)));
    r.report["elapsed_ms"] = elapsed_ms(start);
    return r;
  });
}

Result cmd_kac(const std::filesystem::path& algebra, const std::filesystem::path& subspace, const Options&) {
  return guarded("kac", algebra.string(), [&] {
    Result r = begin("kac", algebra.string());
    r.report["subspace"] = subspace.string();
    const auto start = Clock::now();
    const KacSubspaceFile file = load_kac_subspace(subspace);
    if (const auto l = load_valid(algebra, r)) {
      const TensorDerAlgebra der = tensor_der({{*l, file.generators}});
      const LieSuperAlgebra& d = der.algebra();
      std::vector<Vector> vectors;
      if (file.inner) vectors = der.inner_ideal().basis();
      if (file.all) {
        for (std::size_t i = 0; i < d.dim(); ++i) vectors.push_back(unit_vector(d.dim(), i));
      }
      for (std::size_t n = 0; n < file.vectors.size(); ++n) {
        Vector v(d.dim());
        for (const auto& [c, label] : file.vectors[n]) {
          const auto idx = d.index_of(label);
          if (!idx) throw ParseError("unknown Der(U) basis label '" + label + "'", file.lines[n]);
          v[*idx] += c;
        }
        vectors.push_back(std::move(v));
      }
      const Subspace h = span_in(d, vectors);
      r.report["der_dim"] = d.dim();
      r.report["h_dim"] = h.dim();
      r.report["h_is_subalgebra"] = is_subalgebra(d, h);
      try {
        const KacReport k = kac_semisimple_check(der, h);
        r.report["projection_rank"] = k.projection_rank;
        r.report["required_rank"] = k.required_rank;
        r.report["semisimple"] = k.semisimple;
        if (!k.semisimple) r.exit_code = kMathFailure;
      } catch (const PreconditionError& e) {
        r.report["semisimple"] = false;
        r.report["error"] = e.what();
        r.exit_code = kMathFailure;
      }
      if (!r.report["h_is_subalgebra"].get<bool>()) r.exit_code = kMathFailure;
    }
    r.report["elapsed_ms"] = elapsed_ms(start);
    return r;
  });
}

Result cmd_counterexample(const std::string& name, const Options& opts) {
  return guarded("counterexample", name, [&] {
    const auto start = Clock::now();
    Result r;
    if (name == "sec8") {
      r = coaction_report(opts);
    } else if (name == "sec10") {
      r = commutant_report(opts);
    } else if (name == "notalg") {
      r = nonalgebraic_report(opts);
    } else {
      throw ParseError("unknown counterexample '" + name + "' (expected sec8, sec10 or notalg)");
    }
    r.report["elapsed_ms"] = elapsed_ms(start);
    return r;
  });
}

std::string render(const Json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  std::ostringstream os;
  render_text(report, 0, os);
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic Lie and Hopf superalgebra toolkit", "superlie"};
  Options opts;
  std::string format = "text";
  app.add_option("--truncation", opts.truncation, "Degree bound for Hopf and coaction scans")->check(CLI::Range(1, 12));
  app.add_option("--seed", opts.seed, "Seed for randomized checks");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.require_subcommand(1);
  app.fallthrough();

  std::string file;
  std::string subspace;
  std::string name;
  auto* validate_cmd = app.add_subcommand("validate", "Check homogeneity, antisymmetry and the Jacobi identity");
  validate_cmd->add_option("file", file, "Algebra file")->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "Center, commutant, derived series, radical, quasireductivity");
  analyze_cmd->add_option("file", file, "Algebra file")->required();
  auto* derivations_cmd = app.add_subcommand("derivations", "Superderivations by a direct linear solve");
  derivations_cmd->add_option("file", file, "Algebra file")->required();
  auto* jordan_cmd = app.add_subcommand("jordan", "Exact Jordan-Chevalley decomposition");
  jordan_cmd->add_option("file", file, "Matrix file")->required();
  auto* kac_cmd = app.add_subcommand("kac", "Semisimplicity of a subalgebra of Der(L (x) Lambda(n))");
  kac_cmd->add_option("algebra", file, "Algebra file")->required();
  kac_cmd->add_option("subspace", subspace, "Subspace file")->required();
  auto* counter_cmd = app.add_subcommand("counterexample", "Re-verify a bundled example");
  counter_cmd->add_option("name", name, "sec8, sec10 or notalg")->required()->check(
      CLI::IsMember({"sec8", "sec10", "notalg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "superlie: " << e.what() << '\n';
    return kInputError;
  }
  opts.format = format == "json" ? Format::Json : Format::Text;

  Result r;
  if (app.got_subcommand(validate_cmd)) {
    r = cmd_validate(file, opts);
  } else if (app.got_subcommand(analyze_cmd)) {
    r = cmd_analyze(file, opts);
  } else if (app.got_subcommand(derivations_cmd)) {
    r = cmd_derivations(file, opts);
  } else if (app.got_subcommand(jordan_cmd)) {
    r = cmd_jordan(file, opts);
  } else if (app.got_subcommand(kac_cmd)) {
    r = cmd_kac(file, subspace, opts);
  } else {
    r = cmd_counterexample(name, opts);
  }
  if (r.exit_code == kInputError && r.report.contains("error")) {
    err << "superlie: " << r.report["error"].get<std::string>() << '\n';
  }
  out << render(r.report, opts.format);
  return r.exit_code;
}

}  // namespace superlie::cli
