#include "gps/cli/registry.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "gps/analysis.hpp"

namespace gps::cli {

namespace {

RegistryCase parse_case(const nlohmann::json& j, std::size_t index) {
  const std::string where = "registry entry " + std::to_string(index);
  auto fail = [&](const std::string& what) -> std::invalid_argument {
    return std::invalid_argument(where + ": " + what);
  };
  static const std::set<std::string> allowed{"id", "suite", "label", "origin", "potential", "l", "n_r",
                                             "convention", "grid", "expected", "tolerance"};
  if (!j.is_object()) throw fail("must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw fail("unknown field " + it.key());

  RegistryCase c;
  try {
    c.id = j.at("id").get<std::string>();
    c.suite = j.at("suite").get<std::string>();
    c.label = j.at("label").get<std::string>();
    c.origin = j.at("origin").get<std::string>();
    c.potential = potential_from_json(j.at("potential"));
    c.l = j.at("l").get<int>();
    c.n_r = j.at("n_r").get<int>();
    const auto& conv = j.at("convention");
    c.convention.kinetic = conv.at("c").get<double>();
    c.convention.report_scale = conv.at("s").get<double>();
    c.convention.validate();
    const auto& grid = j.at("grid");
    c.grid.order = grid.at("N").get<int>();
    c.grid.r_max = grid.at("r_max").get<double>();
    c.grid.alpha = grid.at("alpha").get<double>();
    c.grid.validate();
    const auto& expected = j.at("expected");
    if (expected.is_string()) {
      if (expected.get<std::string>() != "exact") throw fail("expected must be a number or \"exact\"");
    } else {
      c.expected = expected.get<double>();
    }
    const auto& tol = j.at("tolerance");
    if (tol.size() != 1) throw fail("tolerance must have exactly one of abs, rel");
    if (tol.contains("abs")) {
      c.tolerance = {Tolerance::Kind::Absolute, tol.at("abs").get<double>()};
    } else if (tol.contains("rel")) {
      c.tolerance = {Tolerance::Kind::Relative, tol.at("rel").get<double>()};
    } else {
      throw fail("tolerance must have abs or rel");
    }
  } catch (const nlohmann::json::exception& e) {
    throw fail(e.what());
  } catch (const std::invalid_argument& e) {
    throw fail(e.what());
  }
  if (c.l < 0 || c.n_r < 0) throw fail("l and n_r must be >= 0");
  if (!(c.tolerance.value > 0.0)) throw fail("tolerance must be > 0");
  if (c.id.empty() || c.suite.empty()) throw fail("id and suite must be non-empty");
  return c;
}

}  // namespace

std::vector<std::string> Registry::suites() const {
  std::vector<std::string> out;
  for (const auto& c : cases)
    if (std::find(out.begin(), out.end(), c.suite) == out.end()) out.push_back(c.suite);
  return out;
}

Registry load_registry(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("registry: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("version") || !j.contains("cases"))
    throw std::invalid_argument("registry: expected {\"version\", \"cases\"}");
  Registry r;
  r.version = j.at("version").get<int>();
  std::set<std::string> ids;
  std::size_t index = 0;
  for (const auto& entry : j.at("cases")) {
    auto c = parse_case(entry, index++);
    if (!ids.insert(c.id).second) throw std::invalid_argument("registry: duplicate id " + c.id);
    r.cases.push_back(std::move(c));
  }
  return r;
}

const Registry& builtin_registry() {
  static const Registry registry = load_registry(embedded_registry_text());
  return registry;
}

double compute_case(const RegistryCase& c) {
  SpectrumRequest request;
  request.potential = c.potential;
  request.l = c.l;
  request.n_states = c.n_r + 1;
  request.grid = c.grid;
  request.convention = c.convention;
  return solve_spectrum(request, false).energies.at(static_cast<std::size_t>(c.n_r));
}

ValidationReport run_validate(const Registry& registry, const std::vector<std::string>& suites) {
  const auto known = registry.suites();
  for (const auto& s : suites)
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw std::invalid_argument("suite: unknown suite \"" + s + "\"");

  ValidationReport report;
  for (const auto& c : registry.cases) {
    if (!suites.empty() && std::find(suites.begin(), suites.end(), c.suite) == suites.end()) continue;
    CaseOutcome o;
    o.spec = c;
    try {
      if (c.expected) {
        o.expected = *c.expected;
      } else {
        const auto exact = exact_reference(c.potential, c.l, c.n_r, c.convention);
        if (!exact) throw std::runtime_error("no closed form for this case");
        o.expected = *exact;
      }
      o.computed = compute_case(c);
      o.abs_error = std::abs(o.computed - o.expected);
      o.rel_error = o.expected != 0.0 ? o.abs_error / std::abs(o.expected) : o.abs_error;
      const double err = c.tolerance.kind == Tolerance::Kind::Absolute ? o.abs_error : o.rel_error;
      o.pass = err <= c.tolerance.value;
    } catch (const std::exception& e) {
      o.error = e.what();
      o.pass = false;
    }
    (o.pass ? report.passed : report.failed) += 1;
    report.cases.push_back(std::move(o));
  }
  return report;
}

}  // namespace gps::cli
