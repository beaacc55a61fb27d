#include "gps/cli/commands.hpp"

#include <ostream>

#include "gps/cli/output.hpp"
#include "gps/cli/registry.hpp"

namespace gps::cli {

namespace {

SpectrumRequest spectrum_request(const RunConfig& c) {
  SpectrumRequest r;
  r.potential = *c.potential;
  r.l = c.l;
  r.n_states = c.n_states;
  r.grid = c.grid;
  r.convention = c.convention;
  return r;
}

int run_solve(const RunConfig& c) {
  const auto result = solve_spectrum(spectrum_request(c), true);
  const bool json = c.format == OutputFormat::Json;
  if (c.density_state) {
    const auto& state = result.states.at(static_cast<std::size_t>(*c.density_state));
    const auto rows = c.radii.empty() ? radial_density(state, state.r) : radial_density(state, c.radii);
    write_text(json ? json_text(density_json(rows)) : density_csv(rows), c.out_path);
    return kExitOk;
  }
  write_text(json ? json_text(spectrum_json(result)) : spectrum_csv(result), c.out_path);
  return kExitOk;
}

int run_sweep(const RunConfig& c) {
  SweepRequest request;
  request.base = spectrum_request(c);
  request.parameter = c.parameter;
  request.values = c.values;
  request.labels = c.labels;
  const auto result = parameter_sweep(request);
  write_text(c.format == OutputFormat::Json ? json_text(sweep_json(result)) : sweep_csv(result), c.out_path);
  return kExitOk;
}

int run_critical(const RunConfig& c) {
  CriticalScreeningRequest request;
  request.family = c.family;
  request.Z = c.Z;
  request.n_r = c.n_r;
  request.l = c.l;
  request.lo = c.bracket->first;
  request.hi = c.bracket->second;
  request.tol = c.tol;
  request.grid = c.grid;
  const auto result = critical_screening(request);
  write_text(c.format == OutputFormat::Json ? json_text(critical_json(result)) : critical_csv(result),
             c.out_path);
  return kExitOk;
}

int run_validate_command(const RunConfig& c, std::ostream& log) {
  ValidationReport report;
  try {
    report = run_validate(builtin_registry(), c.suites);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  write_text(c.format == OutputFormat::Json ? json_text(report_json(report)) : report_csv(report), c.out_path);
  for (const auto& o : report.cases)
    if (!o.pass)
      log << "FAIL " << o.spec.id << " (" << o.spec.label << "): "
          << (o.error.empty() ? "error " + format_number(o.abs_error) : o.error) << "\n";
  log << "validate: " << report.passed << " passed, " << report.failed << " failed\n";
  return report.all_passed() ? kExitOk : kExitValidationFailed;
}

int run_classify(const RunConfig& c) {
  const auto cls = classify(*c.potential);
  write_text(c.format == OutputFormat::Json ? json_text(classify_json(*c.potential, cls))
                                            : classify_csv(*c.potential, cls),
             c.out_path);
  return kExitOk;
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& log) {
  switch (config.command) {
    case Command::Solve: return run_solve(config);
    case Command::Sweep: return run_sweep(config);
    case Command::Critical: return run_critical(config);
    case Command::Validate: return run_validate_command(config, log);
    case Command::Classify: return run_classify(config);
  }
  return kExitConfigError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& log) {
  try {
    const auto config = parse_config(args);
    return run_command(config, log);
  } catch (const HelpRequested& help) {
    write_text(help.what(), "");
    return kExitOk;
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const IoError& e) {
    log << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitValidationFailed;
  }
}

}  // namespace gps::cli
