#include "gps/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

namespace gps::cli {

std::string to_string(Command c) {
  switch (c) {
    case Command::Solve: return "solve";
    case Command::Sweep: return "sweep";
    case Command::Critical: return "critical";
    case Command::Validate: return "validate";
    case Command::Classify: return "classify";
  }
  return "unknown";
}

namespace {

Command command_from_string(const std::string& s) {
  for (auto c : {Command::Solve, Command::Sweep, Command::Critical, Command::Validate, Command::Classify})
    if (to_string(c) == s) return c;
  throw ConfigError("command: unknown command \"" + s + "\"");
}

std::string read_file(const std::string& path, const std::string& field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(field + ": cannot read file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json_text(const std::string& text, const std::string& field) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(field + ": invalid JSON (" + std::string(e.what()) + ")");
  }
}

Convention convention_from_name(const std::string& name) {
  if (name == "half") return Convention::half();
  if (name == "full") return Convention::full();
  throw ConfigError("convention: expected half or full, got \"" + name + "\"");
}

OutputFormat format_from_name(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("format: expected csv or json, got \"" + name + "\"");
}

ScreeningFamily screening_from_name(const std::string& name) {
  if (name == "hulthen") return ScreeningFamily::Hulthen;
  if (name == "yukawa") return ScreeningFamily::Yukawa;
  throw ConfigError("family: expected hulthen or yukawa, got \"" + name + "\"");
}

StateLabel label_from_text(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const int n_r = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const std::string rest = text.substr(colon + 1);
    const int l = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    if (n_r < 0 || l < 0) throw std::invalid_argument(text);
    return {n_r, l};
  } catch (const std::exception&) {
    throw ConfigError("states: expected n_r:l with non-negative integers, got \"" + text + "\"");
  }
}

template <class T>
T json_get(const nlohmann::json& j, const std::string& field) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(field + ": wrong type");
  }
}

double json_number(const nlohmann::json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field + ": must be a number");
  return j.get<double>();
}

int json_int(const nlohmann::json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ConfigError(field + ": must be an integer");
  return j.get<int>();
}

void check_keys(const nlohmann::json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw ConfigError(where + ": must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw ConfigError((where.empty() ? "" : where + ".") + it.key() + ": unknown field");
}

void finalize(RunConfig& c) {
  const bool needs_potential =
      c.command == Command::Solve || c.command == Command::Sweep || c.command == Command::Classify;
  if (needs_potential && !c.potential) throw ConfigError("potential: required for " + to_string(c.command));
  if (c.l < 0) throw ConfigError("l: must be >= 0");
  try {
    c.grid.validate();
    c.convention.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (c.n_states < 1 || c.n_states > c.grid.order - 1)
    throw ConfigError("n-states: must be in [1, N-1]");
  if (c.density_state && (*c.density_state < 0 || *c.density_state >= c.n_states))
    throw ConfigError("density-state: must index one of the solved states");
  if (c.command == Command::Sweep) {
    if (c.parameter.empty()) throw ConfigError("param: required for sweep");
    if (c.values.empty()) throw ConfigError("values: required for sweep");
    try {
      (void)get_parameter(*c.potential, c.parameter);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("param: ") + e.what());
    }
    if (c.labels.empty()) c.labels.push_back({0, c.l});
  }
  if (c.command == Command::Critical) {
    if (!c.bracket) throw ConfigError("bracket: required for critical (lo,hi)");
    if (!(c.bracket->second > c.bracket->first)) throw ConfigError("bracket: need lo < hi");
    if (!(c.tol > 0.0)) throw ConfigError("tol: must be > 0");
    if (c.n_r < 0) throw ConfigError("n-r: must be >= 0");
    if (!(c.Z > 0.0)) throw ConfigError("Z: must be > 0");
  }
}

}  // namespace

PotentialSpec read_potential_argument(const std::string& text) {
  const std::string body = (!text.empty() && text.front() == '@') ? read_file(text.substr(1), "potential") : text;
  try {
    return potential_from_json(parse_json_text(body, "potential"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

RunConfig config_from_json(const nlohmann::json& j) {
  check_keys(j, "", {"command", "potential", "l", "n_states", "grid", "convention", "format", "out",
                     "density_state", "radii", "parameter", "values", "states", "family", "Z", "n_r",
                     "bracket", "tol", "suites"});
  RunConfig c;
  if (!j.contains("command")) throw ConfigError("command: missing required field");
  c.command = command_from_string(json_get<std::string>(j.at("command"), "command"));
  if (j.contains("potential")) {
    try {
      c.potential = potential_from_json(j.at("potential"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (j.contains("l")) c.l = json_int(j.at("l"), "l");
  if (j.contains("n_states")) c.n_states = json_int(j.at("n_states"), "n_states");
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    check_keys(g, "grid", {"N", "r_max", "alpha"});
    if (g.contains("N")) c.grid.order = json_int(g.at("N"), "grid.N");
    if (g.contains("r_max")) c.grid.r_max = json_number(g.at("r_max"), "grid.r_max");
    if (g.contains("alpha")) c.grid.alpha = json_number(g.at("alpha"), "grid.alpha");
    c.grid_overridden = true;
  }
  if (j.contains("convention")) {
    const auto& v = j.at("convention");
    if (v.is_string()) {
      c.convention = convention_from_name(v.get<std::string>());
    } else {
      check_keys(v, "convention", {"c", "s"});
      if (v.contains("c")) c.convention.kinetic = json_number(v.at("c"), "convention.c");
      if (v.contains("s")) c.convention.report_scale = json_number(v.at("s"), "convention.s");
    }
  }
  if (j.contains("format")) c.format = format_from_name(json_get<std::string>(j.at("format"), "format"));
  if (j.contains("out")) c.out_path = json_get<std::string>(j.at("out"), "out");
  if (j.contains("density_state")) c.density_state = json_int(j.at("density_state"), "density_state");
  if (j.contains("radii"))
    for (const auto& v : json_get<nlohmann::json::array_t>(j.at("radii"), "radii"))
      c.radii.push_back(json_number(v, "radii"));
  if (j.contains("parameter")) c.parameter = json_get<std::string>(j.at("parameter"), "parameter");
  if (j.contains("values"))
    for (const auto& v : json_get<nlohmann::json::array_t>(j.at("values"), "values"))
      c.values.push_back(json_number(v, "values"));
  if (j.contains("states")) {
    for (const auto& v : json_get<nlohmann::json::array_t>(j.at("states"), "states")) {
      if (!v.is_array() || v.size() != 2) throw ConfigError("states: each entry must be [n_r, l]");
      c.labels.push_back({json_int(v[0], "states"), json_int(v[1], "states")});
    }
  }
  if (j.contains("family")) c.family = screening_from_name(json_get<std::string>(j.at("family"), "family"));
  if (j.contains("Z")) c.Z = json_number(j.at("Z"), "Z");
  if (j.contains("n_r")) c.n_r = json_int(j.at("n_r"), "n_r");
  if (j.contains("bracket")) {
    const auto& b = j.at("bracket");
    if (!b.is_array() || b.size() != 2) throw ConfigError("bracket: must be [lo, hi]");
    c.bracket = std::make_pair(json_number(b[0], "bracket"), json_number(b[1], "bracket"));
  }
  if (j.contains("tol")) c.tol = json_number(j.at("tol"), "tol");
  if (j.contains("suites"))
    for (const auto& v : json_get<nlohmann::json::array_t>(j.at("suites"), "suites"))
      c.suites.push_back(json_get<std::string>(v, "suites"));
  return c;
}

namespace {

struct Flags {
  std::string potential;
  int l = 0;
  int n_states = 5;
  double r_max = 0.0;
  double alpha = 0.0;
  int order = 0;
  std::string convention;
  double report_scale = 1.0;
  std::string format;
  std::string out;
  int density_state = 0;
  std::vector<double> radii;
  std::string parameter;
  std::vector<double> values;
  std::vector<double> linspace;
  std::vector<std::string> states;
  std::string family;
  double Z = 1.0;
  int n_r = 0;
  std::vector<double> bracket;
  double tol = 1e-6;
  std::vector<std::string> suites;
};

void add_output(CLI::App* app, Flags& f) {
  app->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--out", f.out, "Output file (default: standard output)");
}

void add_grid(CLI::App* app, Flags& f) {
  app->add_option("--rmax", f.r_max, "Box radius r_max (a.u.)");
  app->add_option("--alpha", f.alpha, "Mapping parameter alpha");
  app->add_option("--N", f.order, "Collocation order N");
}

void add_problem(CLI::App* app, Flags& f) {
  app->add_option("--potential", f.potential, "Potential as JSON text or @file");
  app->add_option("--l", f.l, "Angular momentum");
  app->add_option("--n-states", f.n_states, "Number of states");
  add_grid(app, f);
  app->add_option("--convention", f.convention, "Kinetic prefactor: half (1/2) or full (1)")
      ->check(CLI::IsMember({"half", "full"}));
  app->add_option("--report-scale", f.report_scale, "Factor applied to reported energies");
  add_output(app, f);
}

bool given(CLI::App* app, const std::string& name) {
  const auto* opt = app->get_option_no_throw(name);
  return opt && opt->count() > 0;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Generalized pseudospectral solver for the radial Schroedinger equation", "gps-spectra"};
  Flags f;
  std::string config_path;
  app.add_option("--config", config_path, "JSON run file; explicit flags override it");

  auto* solve = app.add_subcommand("solve", "Lowest eigenvalues (and optional density) of one channel");
  add_problem(solve, f);
  solve->add_option("--density-state", f.density_state, "Emit the radial density of this state instead");
  solve->add_option("--radii", f.radii, "Density sample radii (default: interior nodes)")->delimiter(',');

  auto* sweep = app.add_subcommand("sweep", "Energies of labelled states along a parameter grid");
  add_problem(sweep, f);
  sweep->add_option("--param", f.parameter, "Potential parameter to vary");
  sweep->add_option("--values", f.values, "Parameter values, comma separated")->delimiter(',');
  sweep->add_option("--linspace", f.linspace, "start,stop,count")->delimiter(',')->expected(3);
  sweep->add_option("--states", f.states, "Tracked states as n_r:l, comma separated")->delimiter(',');

  auto* critical = app.add_subcommand("critical", "Critical screening parameter by bisection");
  critical->add_option("--family", f.family, "hulthen or yukawa")->check(CLI::IsMember({"hulthen", "yukawa"}));
  critical->add_option("--Z", f.Z, "Nuclear charge");
  critical->add_option("--n-r", f.n_r, "Radial node count of the state");
  critical->add_option("--l", f.l, "Angular momentum");
  critical->add_option("--bracket", f.bracket, "lo,hi")->delimiter(',')->expected(2);
  critical->add_option("--tol", f.tol, "Bracket width to stop at");
  add_grid(critical, f);
  add_output(critical, f);

  auto* validate = app.add_subcommand("validate", "Run the built-in reference suites");
  validate->add_option("--suite", f.suites, "Suite name(s), comma separated (default: all)")->delimiter(',');
  add_output(validate, f);

  auto* classify = app.add_subcommand("classify", "Small-r classification of a potential");
  classify->add_option("--potential", f.potential, "Potential as JSON text or @file");
  add_output(classify, f);

  app.require_subcommand(0, 1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    throw HelpRequested(out.str());
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  RunConfig c;
  CLI::App* sub = nullptr;
  for (auto* s : {solve, sweep, critical, validate, classify})
    if (s->parsed()) sub = s;

  if (!config_path.empty()) {
    c = config_from_json(parse_json_text(read_file(config_path, "config"), "config"));
  } else if (!sub) {
    throw ConfigError("command: expected one of solve, sweep, critical, validate, classify");
  }
  if (sub) {
    const Command cmd = command_from_string(sub->get_name());
    if (!config_path.empty() && cmd != c.command) c = RunConfig{};
    c.command = cmd;
    if (c.command == Command::Critical && !c.grid_overridden) c.grid = CriticalScreeningRequest{}.grid;

    if (given(sub, "--potential")) c.potential = read_potential_argument(f.potential);
    if (given(sub, "--l")) c.l = f.l;
    if (given(sub, "--n-states")) c.n_states = f.n_states;
    if (given(sub, "--rmax")) {
      c.grid.r_max = f.r_max;
      c.grid_overridden = true;
    }
    if (given(sub, "--alpha")) {
      c.grid.alpha = f.alpha;
      c.grid_overridden = true;
    }
    if (given(sub, "--N")) {
      c.grid.order = f.order;
      c.grid_overridden = true;
    }
    if (given(sub, "--convention")) {
      const double s = c.convention.report_scale;
      c.convention = convention_from_name(f.convention);
      c.convention.report_scale = s;
    }
    if (given(sub, "--report-scale")) c.convention.report_scale = f.report_scale;
    if (given(sub, "--format")) c.format = format_from_name(f.format);
    if (given(sub, "--out")) c.out_path = f.out;
    if (given(sub, "--density-state")) c.density_state = f.density_state;
    if (given(sub, "--radii")) c.radii = f.radii;
    if (given(sub, "--param")) c.parameter = f.parameter;
    if (given(sub, "--values")) c.values = f.values;
    if (given(sub, "--linspace")) {
      const double count = f.linspace[2];
      if (count < 2 || count != static_cast<int>(count)) throw ConfigError("linspace: count must be an integer >= 2");
      const int n = static_cast<int>(count);
      c.values.clear();
      for (int i = 0; i < n; ++i)
        c.values.push_back(f.linspace[0] + (f.linspace[1] - f.linspace[0]) * i / (n - 1));
    }
    if (given(sub, "--states")) {
      c.labels.clear();
      for (const auto& s : f.states) c.labels.push_back(label_from_text(s));
    }
    if (given(sub, "--family")) c.family = screening_from_name(f.family);
    if (given(sub, "--Z")) c.Z = f.Z;
    if (given(sub, "--n-r")) c.n_r = f.n_r;
    if (given(sub, "--bracket")) c.bracket = std::make_pair(f.bracket[0], f.bracket[1]);
    if (given(sub, "--tol")) c.tol = f.tol;
    if (given(sub, "--suite")) c.suites = f.suites;
  } else if (c.command == Command::Critical && !c.grid_overridden) {
    c.grid = CriticalScreeningRequest{}.grid;
  }
  finalize(c);
  return c;
}

}  // namespace gps::cli
