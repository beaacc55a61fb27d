#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gps/analysis.hpp"
#include "gps/cli/registry.hpp"

namespace gps::cli {

/// 12 significant digits, "%.12g".
std::string format_number(double v);

/// Value rounded to 12 significant digits, for JSON output.
double round12(double v);

/// Writes text to path, or standard output when path is empty. Throws IoError.
void write_text(const std::string& text, const std::string& path);

std::string spectrum_csv(const SpectrumResult& r);
nlohmann::json spectrum_json(const SpectrumResult& r);

std::string density_csv(const std::vector<std::pair<double, double>>& rows);
nlohmann::json density_json(const std::vector<std::pair<double, double>>& rows);

/// Header: parameter name, then one column per tracked label (E_<n_r+1><letter>).
std::string sweep_csv(const SweepResult& r);
nlohmann::json sweep_json(const SweepResult& r);

std::string critical_csv(const CriticalScreeningResult& r);
nlohmann::json critical_json(const CriticalScreeningResult& r);

std::string report_csv(const ValidationReport& r);
nlohmann::json report_json(const ValidationReport& r);

std::string classify_csv(const PotentialSpec& spec, SingularityClass c);
nlohmann::json classify_json(const PotentialSpec& spec, SingularityClass c);

/// Compact JSON text followed by a newline.
std::string json_text(const nlohmann::json& j);

}  // namespace gps::cli
