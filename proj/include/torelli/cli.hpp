#pragma once

#include "torelli/json_io.hpp"
#include "torelli/quadratic_form.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torelli::cli {

using json::Json;

struct Check {
  std::string name;
  Json expected;
  Json actual;
  bool pass = false;
};

struct CommandReport {
  CommandReport() = default;
  explicit CommandReport(std::string name) : command(std::move(name)) {}

  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> elapsed_ms;

  bool all_pass() const;
  void check(std::string name, Json expected, Json actual);
  void check(std::string name, Json expected, Json actual, bool pass);
  Json to_json() const;
};

struct Outcome {
  int exit_code = 0;
  std::string out;  // standard output
  std::string err;  // standard error
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (argv[0] is the program name). Reads only the
/// TORELLI_CACHE_DIR environment variable.
Outcome execute(const std::vector<std::string>& argv);

struct PaperCheckOptions {
  std::uint64_t seed = 0;
  /// Reference form used by the involution-uniqueness check; overriding it is
  /// a negative control.
  SpQuadraticForm reference = reference_form();
  std::optional<std::filesystem::path> cache_dir;
};

/// Every desk-scale reproduction, one named check per item.
CommandReport paper_check(const PaperCheckOptions& options);

/// SVG picture of the fundamental domain [0, 2]^2 with the given lines and
/// the marked points.
std::string torus_svg(const std::vector<torus::LatticeLine>& lines,
                      const std::vector<torus::Point>& marked);

}  // namespace torelli::cli
