#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gps/cli/config.hpp"

namespace gps::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;

/// Executes a parsed configuration. Results go to config.out_path (or
/// standard output); diagnostics go to log. Returns the exit code.
int run_command(const RunConfig& config, std::ostream& log);

/// Full command-line entry point: parse, run, map errors to exit codes.
int run_cli(const std::vector<std::string>& args, std::ostream& log);

}  // namespace gps::cli
