#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gps/cli/commands.hpp"
#include "gps/cli/config.hpp"
#include "gps/cli/output.hpp"
#include "gps/cli/registry.hpp"

using namespace gps;
using namespace gps::cli;
namespace fs = std::filesystem;

namespace {

const std::string kHulthen = R"({"family":"hulthen","params":{"Z":1,"delta":0.35}})";

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("gps_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(const std::vector<std::string>& args, std::string* log_text = nullptr) {
  std::ostringstream log;
  const int code = run_cli(args, log);
  if (log_text) *log_text = log.str();
  return code;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cl(line);
    std::string cell;
    while (std::getline(cl, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("parse: defaults are filled in") {
  const auto c = parse_config({"solve", "--potential", kHulthen, "--l", "1"});
  CHECK(c.command == Command::Solve);
  CHECK(c.l == 1);
  CHECK(c.grid.order == 300);
  CHECK(c.grid.r_max == 200.0);
  CHECK(c.grid.alpha == 25.0);
  CHECK(c.convention.kinetic == 0.5);
  CHECK(c.convention.report_scale == 1.0);
  CHECK(c.format == OutputFormat::Csv);
  REQUIRE(c.potential);
  CHECK(family_name(*c.potential) == "hulthen");
}

TEST_CASE("parse: overrides") {
  const auto c = parse_config({"solve", "--potential", kHulthen, "--rmax", "500", "--N", "400",
                               "--convention", "full", "--report-scale", "0.5", "--format", "json"});
  CHECK(c.grid.r_max == 500.0);
  CHECK(c.grid.order == 400);
  CHECK(c.grid.alpha == 25.0);
  CHECK(c.grid_overridden);
  CHECK(c.convention.kinetic == 1.0);
  CHECK(c.convention.report_scale == 0.5);
  CHECK(c.format == OutputFormat::Json);
}

TEST_CASE("parse: sweep and critical flags") {
  const auto s = parse_config({"sweep", "--potential", kHulthen, "--param", "delta", "--linspace", "0.1,0.3,5",
                               "--states", "0:0,1:1"});
  CHECK(s.values.size() == 5);
  CHECK(s.values.back() == doctest::Approx(0.3));
  CHECK(s.labels == std::vector<StateLabel>{{0, 0}, {1, 1}});

  const auto c = parse_config({"critical", "--family", "yukawa", "--bracket", "1,1.5"});
  CHECK(c.family == ScreeningFamily::Yukawa);
  CHECK(c.bracket->first == 1.0);
  CHECK(c.grid.r_max == CriticalScreeningRequest{}.grid.r_max);
}

TEST_CASE("parse: rejections") {
  auto rejects = [](const std::vector<std::string>& args, const std::string& needle) {
    try {
      parse_config(args);
    } catch (const ConfigError& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
  };
  CHECK(rejects({"solve", "--potential", R"({"params":{}})"}, "family"));
  CHECK(rejects({"solve", "--potential", "{not json"}, "potential"));
  CHECK(rejects({"solve"}, "potential"));
  CHECK(rejects({"solve", "--potential", kHulthen, "--convention", "third"}, "convention"));
  CHECK(rejects({"sweep", "--potential", kHulthen, "--param", "delta", "--values", "0.1,0.2", "--states", "x"},
                "states"));
  CHECK(rejects({"frobnicate"}, ""));
}

TEST_CASE("run file with unknown fields is rejected") {
  const auto dir = scratch_dir();
  const auto path = dir / "run.json";
  std::ofstream(path) << R"({"command":"solve","potential":{"family":"coulomb","params":{"Z":1}},"colour":1})";
  std::string log;
  CHECK(run({"--config", path.string()}, &log) == kExitConfigError);
  CHECK(log.find("colour") != std::string::npos);

  std::ofstream(path) << R"({"command":"solve","potential":{"family":"coulomb","params":{"Z":1}},"n_states":2})";
  const auto c = parse_config({"--config", path.string(), "solve", "--n-states", "3"});
  CHECK(c.n_states == 3);
  CHECK_THROWS_AS(config_from_json(nlohmann::json{{"command", "solve"}, {"grid", {{"M", 3}}}}), ConfigError);
}

TEST_CASE("exit codes") {
  const auto dir = scratch_dir();
  CHECK(run({"solve", "--potential", R"({"params":{}})"}) == kExitConfigError);
  CHECK(run({"solve", "--potential", kHulthen, "--out", (dir / "no/such/dir/out.csv").string()}) == kExitIoError);
  CHECK(run({"solve", "--potential", kHulthen, "--out", (dir / "ok.csv").string()}) == kExitOk);
  CHECK(run({"validate", "--suite", "nope"}) == kExitConfigError);
  CHECK(run({"critical", "--family", "hulthen", "--bracket", "2.2,3", "--N", "200", "--rmax", "500",
             "--alpha", "1"}) == kExitConfigError);
}

TEST_CASE("process exit codes") {
  auto status = [](const std::string& cmd) {
    const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  const std::string exe = GPS_SPECTRA_EXE;
  CHECK(status(exe + " solve --potential '{\"params\":{}}'") == kExitConfigError);
  CHECK(status(exe + " solve --potential '" + kHulthen + "' --out /proc/forbidden/x.csv") == kExitIoError);
  CHECK(status(exe + " classify --potential '" + kHulthen + "'") == kExitOk);
  CHECK(status(exe + " --help") == kExitOk);
}

TEST_CASE("solve CSV and JSON outputs") {
  const auto dir = scratch_dir();
  const auto a = dir / "a.csv", b = dir / "b.csv", j = dir / "s.json";
  REQUIRE(run({"solve", "--potential", kHulthen, "--l", "1", "--n-states", "3", "--out", a.string()}) == kExitOk);
  REQUIRE(run({"solve", "--potential", kHulthen, "--l", "1", "--n-states", "3", "--out", b.string()}) == kExitOk);
  const auto text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text.find('\r') == std::string::npos);
  const auto rows = csv_rows(text);
  REQUIRE(rows.size() == 4);
  bool found = false;
  for (const auto& cell : rows[1])
    if (cell == format_number(-0.00379309814702)) found = true;
  CHECK(found);

  REQUIRE(run({"solve", "--potential", kHulthen, "--format", "json", "--out", j.string()}) == kExitOk);
  const auto doc = nlohmann::json::parse(slurp(j));
  CHECK(doc.at("energies").is_array());
  CHECK(doc.at("convention") == nlohmann::json{{"c", 0.5}, {"s", 1.0}});
  CHECK(doc.at("grid").at("N") == 300);
  CHECK(doc.at("grid").at("r_max") == 200.0);
}

TEST_CASE("density export") {
  const auto dir = scratch_dir();
  const auto path = dir / "density.csv";
  REQUIRE(run({"solve", "--potential", R"({"family":"coulomb","params":{"Z":1}})", "--density-state", "0",
               "--out", path.string()}) == kExitOk);
  const auto rows = csv_rows(slurp(path));
  CHECK(rows.front() == std::vector<std::string>{"r", "u2"});
  CHECK(rows.size() - 1 == 299);
  REQUIRE(run({"solve", "--potential", R"({"family":"coulomb","params":{"Z":1}})", "--density-state", "0",
               "--radii", "0.5,1,2", "--out", path.string()}) == kExitOk);
  const auto few = csv_rows(slurp(path));
  REQUIRE(few.size() == 4);
  CHECK(std::stod(few[2][1]) == doctest::Approx(4.0 * std::exp(-2.0)).epsilon(1e-8));
}

TEST_CASE("sweep CSV round trip") {
  SweepResult r;
  r.parameter = "delta";
  r.values = {0.1, 0.2};
  r.labels = {{0, 0}, {1, 2}};
  r.energies = {{-0.4512345678901234, -0.0123456789012345}, {-0.40000000001, -1e-7 / 3.0}};
  const auto rows = csv_rows(sweep_csv(r));
  CHECK(rows[0] == std::vector<std::string>{"delta", "E_1s", "E_2d"});
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(std::stod(rows[i + 1][0]) == r.values[i]);
    for (std::size_t k = 0; k < 2; ++k)
      CHECK(std::abs(std::stod(rows[i + 1][k + 1]) - r.energies[i][k]) <= 5e-12 * std::abs(r.energies[i][k]));
  }
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(round12(1.0 / 3.0) == 0.333333333333);
}

TEST_CASE("sweep and critical through the CLI") {
  const auto dir = scratch_dir();
  const auto path = dir / "sweep.csv";
  REQUIRE(run({"sweep", "--potential", R"({"family":"yukawa","params":{"Z":1,"lambda":0.1}})", "--param",
               "lambda", "--values", "0.1,0.05,0.01", "--states", "0:0,0:1", "--out", path.string()}) == kExitOk);
  const auto rows = csv_rows(slurp(path));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"lambda", "E_1s", "E_1p"});

  const auto crit = dir / "critical.json";
  REQUIRE(run({"critical", "--family", "hulthen", "--bracket", "1.5,2.5", "--tol", "1e-3", "--format", "json",
               "--out", crit.string()}) == kExitOk);
  const auto doc = nlohmann::json::parse(slurp(crit));
  CHECK(std::abs(doc.at("critical").get<double>() - 2.0) <= 1e-3);
}

TEST_CASE("classify through the CLI") {
  const auto dir = scratch_dir();
  const auto path = dir / "classify.json";
  REQUIRE(run({"classify", "--potential", R"({"family":"sho","params":{"lambda":1,"alpha":4}})", "--format",
               "json", "--out", path.string()}) == kExitOk);
  CHECK(nlohmann::json::parse(slurp(path)).at("class") == "singular_repulsive");
}

TEST_CASE("registry") {
  const auto& reg = builtin_registry();
  CHECK(reg.version >= 1);
  CHECK(reg.cases.size() >= 100);
  const auto suites = reg.suites();
  for (const char* s : {"trivial", "table1", "table2", "table3", "table4", "table5", "table6", "table7",
                        "table8", "table9"})
    CHECK(std::find(suites.begin(), suites.end(), s) != suites.end());
  for (const auto& c : reg.cases) {
    CHECK((c.origin == "published" || c.origin == "analytic" || c.origin == "oracle"));
    CHECK(c.tolerance.value > 0.0);
  }
  CHECK_THROWS_AS(load_registry(R"({"version":1,"cases":[{"id":"x"}]})"), std::invalid_argument);
}

TEST_CASE("validation report: a case fails iff its error exceeds the tolerance") {
  Registry reg;
  reg.version = 1;
  RegistryCase base;
  base.suite = "mini";
  base.label = "1s";
  base.origin = "analytic";
  base.potential = Coulomb{1.0};
  base.tolerance = {Tolerance::Kind::Absolute, 1e-10};
  RegistryCase good = base, bad = base, rel = base;
  good.id = "good";
  good.expected = -0.5;
  bad.id = "bad";
  bad.expected = -0.5 + 1e-8;
  rel.id = "rel";
  rel.expected = -0.5 * (1 + 5e-9);
  rel.tolerance = {Tolerance::Kind::Relative, 1e-8};
  reg.cases = {good, bad, rel};
  const auto report = run_validate(reg, {});
  CHECK(report.passed == 2);
  CHECK(report.failed == 1);
  CHECK_FALSE(report.cases[1].pass);
  for (const auto& o : report.cases) {
    const double err = o.spec.tolerance.kind == Tolerance::Kind::Absolute ? o.abs_error : o.rel_error;
    CHECK(o.pass == (err <= o.spec.tolerance.value));
  }
}

TEST_CASE("validate suites through the CLI") {
  const auto dir = scratch_dir();
  std::string log;
  CHECK(run({"validate", "--suite", "trivial,table5,table7", "--out", (dir / "r.csv").string()}, &log) == kExitOk);
  CHECK(log.find("0 failed") != std::string::npos);
  CHECK(run({"validate", "--suite", "table2", "--format", "json", "--out", (dir / "r.json").string()}) == kExitOk);
  const auto doc = nlohmann::json::parse(slurp(dir / "r.json"));
  CHECK(doc.at("summary").at("failed") == 0);
}
