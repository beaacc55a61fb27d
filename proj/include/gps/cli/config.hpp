#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gps/analysis.hpp"
#include "gps/convention.hpp"
#include "gps/mapping.hpp"
#include "gps/potentials.hpp"

namespace gps::cli {

enum class Command { Solve, Sweep, Critical, Validate, Classify };
enum class OutputFormat { Csv, Json };

std::string to_string(Command c);

/// Malformed flags or configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be written; maps to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the help text (exit code 0).
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::Solve;
  std::optional<PotentialSpec> potential;
  int l = 0;
  int n_states = 5;
  GridSpec grid;
  bool grid_overridden = false;  // any of N, r_max, alpha given explicitly
  Convention convention;
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;  // empty: standard output

  // solve: optional density export for one state
  std::optional<int> density_state;
  std::vector<double> radii;  // empty: node radii

  // sweep
  std::string parameter;
  std::vector<double> values;
  std::vector<StateLabel> labels;

  // critical
  ScreeningFamily family = ScreeningFamily::Hulthen;
  double Z = 1.0;
  int n_r = 0;
  std::optional<std::pair<double, double>> bracket;
  double tol = 1e-6;

  // validate
  std::vector<std::string> suites;  // empty: every suite
};

/// Parses the command line. A JSON run file given with --config supplies
/// the base configuration; explicit flags override it. Throws ConfigError,
/// or HelpRequested for --help.
RunConfig parse_config(const std::vector<std::string>& args);

/// RunConfig from a JSON object; unknown fields are rejected.
RunConfig config_from_json(const nlohmann::json& j);

/// Reads a potential from inline JSON text or "@path".
PotentialSpec read_potential_argument(const std::string& text);

}  // namespace gps::cli
