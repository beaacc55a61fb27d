#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gps/convention.hpp"
#include "gps/mapping.hpp"
#include "gps/potentials.hpp"

namespace gps::cli {

struct Tolerance {
  enum class Kind { Absolute, Relative };
  Kind kind = Kind::Absolute;
  double value = 0.0;
};

/// One reference eigenvalue with the grid and convention it is checked at.
struct RegistryCase {
  std::string id;
  std::string suite;
  std::string label;
  std::string origin;  // published | analytic | oracle
  PotentialSpec potential;
  int l = 0;
  int n_r = 0;
  Convention convention;
  GridSpec grid;
  std::optional<double> expected;  // empty: closed form from exact_reference
  Tolerance tolerance;
};

struct Registry {
  int version = 0;
  std::vector<RegistryCase> cases;

  std::vector<std::string> suites() const;
};

/// Parses registry JSON; throws std::invalid_argument naming the entry.
Registry load_registry(std::string_view text);

/// The registry compiled into the library.
const Registry& builtin_registry();
std::string_view embedded_registry_text();

struct CaseOutcome {
  RegistryCase spec;
  double expected = 0.0;
  double computed = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  bool pass = false;
  std::string error;  // non-empty when the solve itself failed
};

struct ValidationReport {
  std::vector<CaseOutcome> cases;
  int passed = 0;
  int failed = 0;
  bool all_passed() const { return failed == 0; }
};

/// Energy of state n_r in channel l for one registry case.
double compute_case(const RegistryCase& c);

/// Runs every case of the selected suites (all when empty). Unknown suite
/// names throw std::invalid_argument.
ValidationReport run_validate(const Registry& registry, const std::vector<std::string>& suites);

}  // namespace gps::cli
