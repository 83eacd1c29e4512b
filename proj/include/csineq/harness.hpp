#pragma once

#include "csineq/inequalities.hpp"
#include "csineq/matrix.hpp"
#include "csineq/norms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace csineq {

/// Stable suite identifiers, in report order.
const std::vector<std::string>& all_suite_ids();
bool is_suite_id(std::string_view id);

struct ParamGrid {
    std::vector<double> mu{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    /// s and t values for corner-max.
    std::vector<double> st{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    std::vector<double> p{0.1, 0.25, 0.5, 0.75, 0.9};
    /// (alpha, beta) pairs for dragomir-2d; each pair on one side of 1/2.
    std::vector<std::pair<double, double>> alpha_beta{{0.0, 0.0}, {0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}, {0.4, 0.4},
                                                      {0.6, 0.6}, {0.7, 0.7}, {0.8, 0.8}, {0.9, 0.9}, {1.0, 1.0}};
    /// Heinz exponents for cor44 and the power pairs of thm43; the values in
    /// (0, 1) also drive the t^alpha functions of kwong-psd.
    std::vector<double> alpha{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
};

struct TrialConfig {
    std::vector<std::string> suites;
    int n_min = 1;
    int n_max = 6;
    std::vector<double> r_values{0.5, 1.0, 2.0, 3.0};
    std::vector<NormSpec> norm_specs{NormSpec::trace(), NormSpec::frobenius(), NormSpec::spectral(),
                                     NormSpec::schatten(3.0), NormSpec::kyfan(2)};
    ParamGrid grid;
    int trials = 200;
    std::uint64_t master_seed = 20140523;
    Tolerances tol;
    double pd_floor = 0.05;
    int curve_grid = 21;
    int surface_grid = 11;
    /// Worker threads; 0 means hardware concurrency. Results do not depend on it.
    int threads = 0;
};

/// Throws Error(ConfigError) describing the first problem found.
void validate(const TrialConfig& config);

/// One named parameter assignment of a suite grid.
struct GridPoint {
    std::vector<std::pair<std::string, double>> values;
    /// Scalar function label for kwong-psd / thm43, empty otherwise.
    std::string fn;

    std::optional<double> get(std::string_view name) const;
};

std::vector<GridPoint> suite_grid(const std::string& suite_id, const TrialConfig& config);

enum class InstanceKind { PsdPair, GeneralTriple, PdWithX, Points };
InstanceKind instance_kind(const std::string& suite_id);

/// Random instance of one trial. Unused operands are 1x1 placeholders.
struct Instance {
    InstanceKind kind;
    std::size_t n;
    double r;
    NormSpec spec;
    MatrixC a;
    MatrixC b;
    MatrixC x;
    std::vector<double> points;
};

/// Raw random draws behind an Instance: square factors for the matrix
/// operands and log-scale points for Kwong samples.
struct InstanceFactors {
    MatrixC ga;
    MatrixC gb;
    MatrixC gx;
    std::vector<double> log_points;
};

InstanceFactors draw_factors(const std::string& suite_id, std::uint64_t master_seed, std::uint64_t trial,
                             std::size_t n);
Instance build_instance(InstanceKind kind, std::size_t n, double r, const NormSpec& spec,
                        const InstanceFactors& factors, double pd_floor);

/// Matrices for trial `trial` of `suite_id`, drawn from streams derived from
/// (master_seed, suite_id, trial) only.
Instance make_instance(const std::string& suite_id, std::uint64_t master_seed, std::uint64_t trial, std::size_t n,
                       double r, const NormSpec& spec, double pd_floor);

/// Evaluates one suite at one grid point.
InequalityVerdict evaluate(const std::string& suite_id, const Instance& inst, const GridPoint& point,
                           const TrialConfig& config);

struct TrialRecord {
    std::string suite_id;
    /// Seed path and parameters; replay() regenerates the verdict from it.
    std::string fingerprint;
    int trial = 0;
    std::size_t n = 0;
    double r = 0.0;
    std::string norm;
    GridPoint point;
    std::optional<InequalityVerdict> verdict;
    std::string error;
    bool pass = false;
};

struct SuiteReport {
    std::string id;
    int trials = 0;
    int grid_size = 0;
    int passes = 0;
    int failures = 0;
    std::vector<TrialRecord> records;
    std::optional<double> min_slack;
    std::optional<double> min_scaled_slack;
    std::vector<std::string> notes;
};

struct RunReport {
    TrialConfig config;
    std::vector<SuiteReport> suites;
    double wall_time_s = 0.0;

    bool any_failure() const noexcept;
};

RunReport run_suites(const TrialConfig& config);

/// Re-evaluates a TrialRecord fingerprint with the given tolerances and pd floor.
InequalityVerdict replay(const std::string& fingerprint, const Tolerances& tol = {}, double pd_floor = 0.05);

/// Parses "3" or "1-6".
std::pair<int, int> parse_range(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);
std::vector<NormSpec> parse_norm_list(std::string_view text);
/// "all" or a comma-separated list of suite ids.
std::vector<std::string> parse_suite_list(std::string_view text);

} // namespace csineq
