#pragma once

#include "holonorm/pipeline/analysis.hpp"

#include "json.hpp"

#include <string>

namespace holonorm {

/// Schema 1. Every number is a decimal string; floating values keep only their agreed digits.
nlohmann::json report_json(const AnalysisReport& rep);

/// One expansion as reported under "asymptotics".
nlohmann::json asymptotic_json(const AsymptoticForm& form, const std::string& function = "F0");

/// JSON (2-space indent), the statistics CSV, or a plain-text summary.
std::string render_report(const AnalysisReport& rep, OutputFormat format);

} // namespace holonorm
