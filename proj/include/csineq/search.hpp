#pragma once

#include "csineq/harness.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace csineq {

struct SearchResult {
    std::string suite_id;
    Instance instance;
    GridPoint point;
    InequalityVerdict verdict;
    /// verdict.scaled_min_slack() of the best instance; reported even when positive.
    double objective;
    long evaluations;
    int restarts;
    std::uint64_t seed;
};

/// Random-restart hill climbing over instance factors (and Kwong points)
/// minimising the scaled minimum slack of one suite. Dimension, r, norm and
/// grid point are drawn per restart from the config lists. Runs exactly
/// `budget` verdict evaluations.
SearchResult search_counterexample(const std::string& suite_id, const TrialConfig& config, long budget,
                                   std::uint64_t seed);

nlohmann::json matrix_to_json(const MatrixC& m);
MatrixC matrix_from_json(const nlohmann::json& j);

/// Persisted form: suite, params, full instance matrices, verdict.
nlohmann::json search_to_json(const SearchResult& result);

/// Re-evaluates a persisted search result from its stored instance.
InequalityVerdict reevaluate(const nlohmann::json& persisted, const TrialConfig& config);

} // namespace csineq
