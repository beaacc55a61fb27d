#include "gps/cli/output.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "gps/cli/config.hpp"

namespace gps::cli {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout.write(text.data(), static_cast<std::streamsize>(text.size()));
    std::cout.flush();
    if (!std::cout) throw IoError("out: failed writing to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("out: cannot open " + path + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("out: failed writing " + path);
}

std::string json_text(const nlohmann::json& j) { return j.dump() + "\n"; }

namespace {

nlohmann::json grid_json(const GridSpec& g) {
  return {{"N", g.order}, {"r_max", round12(g.r_max)}, {"alpha", round12(g.alpha)}};
}

nlohmann::json convention_json(const Convention& c) {
  return {{"c", round12(c.kinetic)}, {"s", round12(c.report_scale)}};
}

std::string column_label(const StateLabel& s) {
  return "E_" + level_label(s.n_r, s.l, LetterScheme::Standard);
}

}  // namespace

std::string spectrum_csv(const SpectrumResult& r) {
  std::string out = "index,l,nodes,energy\n";
  for (std::size_t k = 0; k < r.energies.size(); ++k) {
    const int nodes = k < r.states.size() ? r.states[k].node_count : static_cast<int>(k);
    out += std::to_string(k) + "," + std::to_string(r.request.l) + "," + std::to_string(nodes) + "," +
           format_number(r.energies[k]) + "\n";
  }
  return out;
}

nlohmann::json spectrum_json(const SpectrumResult& r) {
  nlohmann::json energies = nlohmann::json::array();
  for (double e : r.energies) energies.push_back(round12(e));
  nlohmann::json states = nlohmann::json::array();
  for (const auto& s : r.states)
    states.push_back({{"energy", round12(s.energy)}, {"nodes", s.node_count}, {"norm", round12(s.norm)}});
  return {{"command", "solve"},
          {"potential", to_json(r.request.potential)},
          {"l", r.request.l},
          {"convention", convention_json(r.request.convention)},
          {"grid", grid_json(r.request.grid)},
          {"energies", energies},
          {"states", states}};
}

std::string density_csv(const std::vector<std::pair<double, double>>& rows) {
  std::string out = "r,u2\n";
  for (const auto& [r, u2] : rows) out += format_number(r) + "," + format_number(u2) + "\n";
  return out;
}

nlohmann::json density_json(const std::vector<std::pair<double, double>>& rows) {
  nlohmann::json r = nlohmann::json::array(), u2 = nlohmann::json::array();
  for (const auto& [a, b] : rows) {
    r.push_back(round12(a));
    u2.push_back(round12(b));
  }
  return {{"r", r}, {"u2", u2}};
}

std::string sweep_csv(const SweepResult& r) {
  std::string out = r.parameter;
  for (const auto& label : r.labels) out += "," + column_label(label);
  out += "\n";
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    out += format_number(r.values[i]);
    for (double e : r.energies[i]) out += "," + format_number(e);
    out += "\n";
  }
  return out;
}

nlohmann::json sweep_json(const SweepResult& r) {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& s : r.labels)
    labels.push_back({{"n_r", s.n_r}, {"l", s.l}, {"label", level_label(s.n_r, s.l, LetterScheme::Standard)}});
  nlohmann::json values = nlohmann::json::array(), energies = nlohmann::json::array();
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    values.push_back(round12(r.values[i]));
    nlohmann::json row = nlohmann::json::array();
    for (double e : r.energies[i]) row.push_back(round12(e));
    energies.push_back(row);
  }
  return {{"command", "sweep"}, {"parameter", r.parameter}, {"labels", labels},
          {"values", values}, {"energies", energies}};
}

std::string critical_csv(const CriticalScreeningResult& r) {
  return "family,n_r,l,critical,lo,hi,width,probes\n" + to_string(r.family) + "," + std::to_string(r.n_r) +
         "," + std::to_string(r.l) + "," + format_number(r.critical) + "," + format_number(r.lo) + "," +
         format_number(r.hi) + "," + format_number(r.width) + "," + std::to_string(r.probes) + "\n";
}

nlohmann::json critical_json(const CriticalScreeningResult& r) {
  return {{"command", "critical"}, {"family", to_string(r.family)}, {"n_r", r.n_r}, {"l", r.l},
          {"critical", round12(r.critical)}, {"lo", round12(r.lo)}, {"hi", round12(r.hi)},
          {"width", round12(r.width)}, {"probes", r.probes}};
}

std::string report_csv(const ValidationReport& r) {
  std::string out = "id,suite,label,expected,computed,abs_error,rel_error,tolerance_kind,tolerance,status\n";
  for (const auto& c : r.cases) {
    const bool abs = c.spec.tolerance.kind == Tolerance::Kind::Absolute;
    out += c.spec.id + "," + c.spec.suite + "," + c.spec.label + "," + format_number(c.expected) + "," +
           (c.error.empty() ? format_number(c.computed) : std::string("nan")) + "," +
           format_number(c.abs_error) + "," + format_number(c.rel_error) + "," + (abs ? "abs" : "rel") + "," +
           format_number(c.spec.tolerance.value) + "," + (c.pass ? "pass" : "FAIL") + "\n";
  }
  return out;
}

nlohmann::json report_json(const ValidationReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases) {
    nlohmann::json entry{{"id", c.spec.id},
                         {"suite", c.spec.suite},
                         {"label", c.spec.label},
                         {"expected", round12(c.expected)},
                         {"abs_error", round12(c.abs_error)},
                         {"rel_error", round12(c.rel_error)},
                         {"tolerance", {{c.spec.tolerance.kind == Tolerance::Kind::Absolute ? "abs" : "rel",
                                         round12(c.spec.tolerance.value)}}},
                         {"pass", c.pass}};
    if (c.error.empty())
      entry["computed"] = round12(c.computed);
    else
      entry["error"] = c.error;
    cases.push_back(entry);
  }
  return {{"command", "validate"}, {"cases", cases},
          {"summary", {{"passed", r.passed}, {"failed", r.failed}, {"total", r.passed + r.failed}}}};
}

std::string classify_csv(const PotentialSpec& spec, SingularityClass c) {
  return "family,class\n" + family_name(spec) + "," + std::string(to_string(c)) + "\n";
}

nlohmann::json classify_json(const PotentialSpec& spec, SingularityClass c) {
  return {{"command", "classify"}, {"potential", to_json(spec)}, {"class", std::string(to_string(c))}};
}

}  // namespace gps::cli
