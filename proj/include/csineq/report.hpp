#pragma once

#include "csineq/harness.hpp"

#include "json.hpp"

#include <string>

namespace csineq {

nlohmann::json config_to_json(const TrialConfig& config);
nlohmann::json verdict_to_json(const InequalityVerdict& v);

/// Report body; the "timing" key is added only when include_timing is set,
/// so two bodies from one config compare equal.
nlohmann::json to_json(const RunReport& report, bool include_timing = true);

/// One row per (suite, trial, grid point).
std::string to_csv(const RunReport& report);

} // namespace csineq
