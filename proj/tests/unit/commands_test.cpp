#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace superlie::cli {
namespace {

std::string fixture_path(const std::string& file) { return std::string(SUPERLIE_FIXTURE_DIR) + "/" + file; }

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "superlie");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Commands, ValidateFixtures) {
  for (const char* f : {"gl11.alg", "gl22.alg", "sl2.alg", "queer.alg", "nonabelian2.alg"}) {
    const Result r = cmd_validate(fixture_path(f), {});
    EXPECT_EQ(r.exit_code, kPass) << f;
    EXPECT_TRUE(r.report["validation"]["valid"].get<bool>()) << f;
  }
}

TEST(Commands, AnalyzeSl2) {
  const Result r = cmd_analyze(fixture_path("sl2.alg"), {});
  EXPECT_EQ(r.exit_code, kPass);
  EXPECT_EQ(r.report["center"]["dim"], 0);
  EXPECT_EQ(r.report["commutant"]["dim"], 3);
  EXPECT_TRUE(r.report["quasireductivity"]["quasireductive"].get<bool>());
}

TEST(Commands, KacExitCodes) {
  EXPECT_EQ(cmd_kac(fixture_path("sl2.alg"), fixture_path("sl2_sym2_all.sub"), {}).exit_code, kPass);
  EXPECT_EQ(cmd_kac(fixture_path("sl2.alg"), fixture_path("sl2_sym2_nonalgebraic.sub"), {}).exit_code, kPass);
  EXPECT_EQ(cmd_kac(fixture_path("sl2.alg"), fixture_path("sl2_sym2_inner.sub"), {}).exit_code, kMathFailure);
  EXPECT_EQ(cmd_kac(fixture_path("sl2.alg"), fixture_path("missing.sub"), {}).exit_code, kInputError);
}

TEST(Commands, Counterexamples) {
  const Result coaction = cmd_counterexample("sec8", {});
  EXPECT_EQ(coaction.exit_code, kPass);
  EXPECT_EQ(coaction.report["verdict"], "Verified");
  const Result commutant = cmd_counterexample("sec10", {});
  EXPECT_EQ(commutant.exit_code, kPass);
  EXPECT_EQ(commutant.report["verdict"], "NotAlgebraic");
  const Result nonalgebraic = cmd_counterexample("notalg", {});
  EXPECT_EQ(nonalgebraic.exit_code, kPass);
  EXPECT_EQ(nonalgebraic.report["h_dim"], 15);
  EXPECT_EQ(nonalgebraic.report["verdict"], "NotAlgebraic");
}

TEST(Commands, TextRendering) {
  const CliRun r = run_cli({"counterexample", "sec10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[v,v] = 2x + 4y"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: NotAlgebraic"), std::string::npos);
}

TEST(Commands, JsonRendering) {
  const CliRun r = run_cli({"counterexample", "notalg", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "NotAlgebraic");
  EXPECT_FALSE(j["semisimple_in_image"].get<bool>());
}

TEST(Commands, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"counterexample", "sec9"}).code, 2);
  EXPECT_EQ(run_cli({"validate"}).code, 2);
  EXPECT_EQ(run_cli({"--truncation", "0", "counterexample", "sec8"}).code, 2);
  EXPECT_EQ(run_cli({"--format", "xml", "validate", fixture_path("sl2.alg")}).code, 2);
}

TEST(Commands, HelpExitsZero) { EXPECT_EQ(run_cli({"--help"}).code, 0); }

}  // namespace
}  // namespace superlie::cli
