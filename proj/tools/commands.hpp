#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

namespace superlie::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

struct Options {
  std::size_t truncation = 4;
  std::uint64_t seed = 20261016;
  Format format = Format::Text;
};

enum ExitCode : int { kPass = 0, kMathFailure = 1, kInputError = 2 };

struct Result {
  int exit_code = kPass;
  Json report;
};

Result cmd_validate(const std::filesystem::path& file, const Options& opts);
/// Center, commutant, derived series, even radical and quasireductivity.
Result cmd_analyze(const std::filesystem::path& file, const Options& opts);
Result cmd_derivations(const std::filesystem::path& file, const Options& opts);
Result cmd_jordan(const std::filesystem::path& file, const Options& opts);
/// Semisimplicity of H inside Der(L (x) Lambda(n)) by the projection criterion.
/// Exits 0 when H is semisimple and 1 otherwise.
Result cmd_kac(const std::filesystem::path& algebra, const std::filesystem::path& subspace, const Options& opts);
/// name is one of sec8, sec10, notalg.
Result cmd_counterexample(const std::string& name, const Options& opts);

/// Renders a report as indented "key: value" lines or as JSON.
std::string render(const Json& report, Format format);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superlie::cli
