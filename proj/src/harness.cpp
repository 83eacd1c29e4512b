#include "csineq/harness.hpp"

#include "csineq/errors.hpp"
#include "csineq/generators.hpp"
#include "csineq/random.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <thread>

namespace csineq {

namespace {

std::string exact(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(std::string_view s, const char* what)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(Errc::ConfigError, std::string("cannot parse ") + what + " '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

int required_dimension(const NormSpec& spec) { return spec.kind() == NormSpec::Kind::KyFan ? spec.k() : 1; }

std::string fingerprint_of(const std::string& suite_id, std::uint64_t seed, int trial, std::size_t n, double r,
                           const NormSpec& spec, const GridPoint& point)
{
    std::string s = "suite=" + suite_id + ";seed=" + std::to_string(seed) + ";trial=" + std::to_string(trial) +
                    ";n=" + std::to_string(n) + ";r=" + exact(r) + ";norm=" + spec.str();
    for (const auto& [k, v] : point.values) s += ";" + k + "=" + exact(v);
    if (!point.fn.empty()) s += ";fn=" + point.fn;
    return s;
}

// Lazily built per-trial state shared by the grid points of one instance.
class TrialEvaluator {
public:
    TrialEvaluator(const std::string& suite_id, const Instance& inst, const TrialConfig& config)
        : suite_(suite_id), inst_(inst), config_(config) {}

    InequalityVerdict operator()(const GridPoint& pt)
    {
        const Tolerances& tol = config_.tol;
        auto need = [&](std::string_view name) {
            const auto v = pt.get(name);
            if (!v) throw Error(Errc::InvalidParams, suite_ + ": grid point lacks '" + std::string(name) + "'");
            return *v;
        };

        if (suite_ == "cs-basic") return check_cs_basic(heinz(), need("mu"), tol);
        if (suite_ == "bhatia-davis") return check_bhatia_davis(inst_.a, inst_.b, inst_.x, inst_.r, inst_.spec, tol);
        if (suite_ == "hh-chain") return check_hh_chain(heinz(), need("mu"), tol);
        if (suite_ == "corner-max") return check_corner_max(heinz(), need("s"), need("t"), tol);
        if (suite_ == "dragomir-2d" || suite_ == "dragomir-2d-cor26") {
            InequalityVerdict v = check_dragomir_2d(heinz(), need("alpha"), need("beta"), tol);
            v.suite_id = suite_;
            return v;
        }
        if (suite_ == "thm32") return check_thm32(heinz(), need("mu"), need("p"), tol);
        if (suite_ == "thm33") return check_thm33(heinz(), need("mu"), need("p"), tol);
        if (suite_ == "convexity-f") return check_convexity_f(heinz(), config_.curve_grid, tol);
        if (suite_ == "convexity-G") return check_convexity_G(heinz(), config_.surface_grid, tol);
        if (suite_ == "jensen-phi") return check_jensen_phi(heinz(), 0.5, need("p"), config_.curve_grid, tol);
        if (suite_ == "kwong-psd") return check_kwong_sample(inst_.points, ScalarFn::parse(pt.fn), tol);
        if (suite_ == "thm43") {
            const auto parts = split(pt.fn, '|');
            if (parts.size() != 2) throw Error(Errc::InvalidParams, "thm43: fn must be 'f|g'");
            return check_thm43(inst_.a, inst_.x, ScalarFn::parse(std::string(parts[0])),
                               ScalarFn::parse(std::string(parts[1])), tol);
        }
        if (suite_ == "cor44") return check_cor44(inst_.a, inst_.x, need("alpha"), tol);
        if (suite_ == "example45") return check_example45(inst_.a, inst_.x, tol);
        throw Error(Errc::ConfigError, "unknown suite '" + suite_ + "'");
    }

private:
    const HeinzEvaluator& heinz()
    {
        if (!heinz_) heinz_ = std::make_unique<HeinzEvaluator>(inst_.a, inst_.b, inst_.x, inst_.r, inst_.spec);
        return *heinz_;
    }

    const std::string& suite_;
    const Instance& inst_;
    const TrialConfig& config_;
    std::unique_ptr<HeinzEvaluator> heinz_;
};

std::vector<TrialRecord> run_trial(const std::string& suite_id, const TrialConfig& config,
                                   const std::vector<GridPoint>& grid, int trial)
{
    const std::size_t nr = config.r_values.size();
    const double r = config.r_values[static_cast<std::size_t>(trial) % nr];
    const NormSpec spec = config.norm_specs[(static_cast<std::size_t>(trial) / nr) % config.norm_specs.size()];
    const int n_lo = std::max(config.n_min, required_dimension(spec));
    const std::uint64_t ts = derive_seed(config.master_seed, suite_id, static_cast<std::uint64_t>(trial));
    const auto span = static_cast<std::uint64_t>(config.n_max - n_lo + 1);
    const auto n = static_cast<std::size_t>(n_lo + static_cast<int>(derive_seed(ts, "n", 0) % span));

    std::vector<TrialRecord> out;
    out.reserve(grid.size());
    std::optional<Instance> inst;
    std::string inst_error;
    try {
        inst = make_instance(suite_id, config.master_seed, static_cast<std::uint64_t>(trial), n, r, spec,
                             config.pd_floor);
    } catch (const std::exception& e) {
        inst_error = e.what();
    }
    std::optional<TrialEvaluator> eval;
    if (inst) eval.emplace(suite_id, *inst, config);

    for (const auto& pt : grid) {
        TrialRecord rec;
        rec.suite_id = suite_id;
        rec.fingerprint = fingerprint_of(suite_id, config.master_seed, trial, n, r, spec, pt);
        rec.trial = trial;
        rec.n = n;
        rec.r = r;
        rec.norm = spec.str();
        rec.point = pt;
        if (!inst) {
            rec.error = inst_error;
        } else {
            try {
                rec.verdict = (*eval)(pt);
                rec.pass = rec.verdict->pass;
            } catch (const std::exception& e) {
                rec.error = e.what();
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

SuiteReport aggregate(const std::string& suite_id, int trials, int grid_size,
                      std::vector<std::vector<TrialRecord>> per_trial)
{
    constexpr std::size_t kMaxNotes = 50;
    SuiteReport rep;
    rep.id = suite_id;
    rep.trials = trials;
    rep.grid_size = grid_size;
    std::size_t note_count = 0;
    for (auto& recs : per_trial) {
        for (auto& rec : recs) {
            if (rec.pass)
                ++rep.passes;
            else
                ++rep.failures;
            if (rec.verdict) {
                const double ms = rec.verdict->min_slack();
                const double ss = rec.verdict->scaled_min_slack();
                if (!rep.min_slack || ms < *rep.min_slack) rep.min_slack = ms;
                if (!rep.min_scaled_slack || ss < *rep.min_scaled_slack) rep.min_scaled_slack = ss;
                for (const auto& note : rec.verdict->notes) {
                    if (note_count++ < kMaxNotes) rep.notes.push_back(rec.fingerprint + ": " + note);
                }
            }
            rep.records.push_back(std::move(rec));
        }
    }
    if (note_count > kMaxNotes) rep.notes.push_back(std::to_string(note_count) + " notes in total");
    return rep;
}

} // namespace

const std::vector<std::string>& all_suite_ids()
{
    static const std::vector<std::string> ids{
        "cs-basic", "bhatia-davis", "hh-chain",   "corner-max", "dragomir-2d", "dragomir-2d-cor26", "thm32", "thm33",
        "convexity-f", "convexity-G", "jensen-phi", "kwong-psd", "thm43",       "cor44",             "example45"};
    return ids;
}

bool is_suite_id(std::string_view id)
{
    const auto& ids = all_suite_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::optional<double> GridPoint::get(std::string_view name) const
{
    for (const auto& [k, v] : values)
        if (k == name) return v;
    return std::nullopt;
}

void validate(const TrialConfig& c)
{
    auto fail = [](const std::string& msg) { throw Error(Errc::ConfigError, msg); };
    if (c.suites.empty()) fail("suite list is empty");
    for (const auto& s : c.suites)
        if (!is_suite_id(s)) fail("unknown suite '" + s + "'");
    if (c.trials < 1) fail("trials must be >= 1");
    if (c.n_min < 1 || c.n_max < c.n_min) fail("dimension range must satisfy 1 <= n_min <= n_max");
    if (c.r_values.empty()) fail("r list is empty");
    for (double r : c.r_values)
        if (!(r >= 0.0) || !std::isfinite(r)) fail("r values must be finite and >= 0");
    if (c.norm_specs.empty()) fail("norm list is empty");
    for (const auto& ns : c.norm_specs)
        if (required_dimension(ns) > c.n_max)
            fail(ns.str() + " needs n >= " + std::to_string(ns.k()) + "; raise the dimension range or drop it from the norm list");
    for (double v : c.grid.mu)
        if (!in_unit(v)) fail("mu values must lie in [0, 1]");
    for (double v : c.grid.st)
        if (!in_unit(v)) fail("s/t values must lie in [0, 1]");
    for (double v : c.grid.alpha)
        if (!in_unit(v)) fail("alpha values must lie in [0, 1]");
    for (double v : c.grid.p)
        if (!(v > 0.0 && v < 1.0)) fail("p values must lie in (0, 1)");
    for (const auto& [a, b] : c.grid.alpha_beta) {
        if (!in_unit(a) || !in_unit(b)) fail("alpha/beta values must lie in [0, 1]");
        if (!((a < 0.5 && b < 0.5) || (a > 0.5 && b > 0.5))) fail("alpha and beta must lie on the same side of 1/2");
    }
    if (!(c.tol.rel >= 0.0) || !(c.tol.quad > 0.0) || !(c.tol.omega > 0.0)) fail("tolerances must be positive");
    if (!(c.pd_floor > 0.0)) fail("pd floor must be positive");
    if (c.curve_grid < 3 || c.curve_grid % 2 == 0) fail("curve grid must be odd and >= 3");
    if (c.surface_grid < 3 || c.surface_grid % 2 == 0) fail("surface grid must be odd and >= 3");
    if (c.threads < 0) fail("threads must be >= 0");
}

std::vector<GridPoint> suite_grid(const std::string& id, const TrialConfig& c)
{
    std::vector<GridPoint> g;
    auto one = [&](std::vector<std::pair<std::string, double>> v, std::string fn = {}) {
        g.push_back(GridPoint{std::move(v), std::move(fn)});
    };
    if (id == "cs-basic" || id == "hh-chain") {
        for (double mu : c.grid.mu) one({{"mu", mu}});
    } else if (id == "corner-max") {
        for (double s : c.grid.st)
            for (double t : c.grid.st) one({{"s", s}, {"t", t}});
    } else if (id == "dragomir-2d") {
        for (const auto& [a, b] : c.grid.alpha_beta) one({{"alpha", a}, {"beta", b}});
    } else if (id == "dragomir-2d-cor26") {
        one({{"alpha", 1.0}, {"beta", 1.0}});
    } else if (id == "thm32" || id == "thm33") {
        for (double mu : c.grid.mu)
            for (double p : c.grid.p) one({{"mu", mu}, {"p", p}});
    } else if (id == "jensen-phi") {
        for (double p : c.grid.p) one({{"delta", 0.5}, {"p", p}});
    } else if (id == "kwong-psd") {
        one({}, "sqrt");
        for (double a : c.grid.alpha)
            if (a > 0.0 && a < 1.0) one({}, ScalarFn::power(a).name());
        one({}, "log1p");
    } else if (id == "thm43") {
        for (double a : c.grid.alpha) one({}, ScalarFn::power(a).name() + "|" + ScalarFn::power(1.0 - a).name());
        one({}, "log1p|t_over_log1p");
    } else if (id == "cor44") {
        for (double a : c.grid.alpha) one({{"alpha", a}});
    } else if (is_suite_id(id)) {
        one({});
    } else {
        throw Error(Errc::ConfigError, "unknown suite '" + id + "'");
    }
    return g;
}

InstanceKind instance_kind(const std::string& id)
{
    if (id == "bhatia-davis") return InstanceKind::GeneralTriple;
    if (id == "thm43" || id == "cor44" || id == "example45") return InstanceKind::PdWithX;
    if (id == "kwong-psd") return InstanceKind::Points;
    return InstanceKind::PsdPair;
}

InstanceFactors draw_factors(const std::string& suite_id, std::uint64_t master_seed, std::uint64_t trial,
                             std::size_t n)
{
    const std::uint64_t ts = derive_seed(master_seed, suite_id, trial);
    Rng ra(derive_seed(ts, "A", 0));
    Rng rb(derive_seed(ts, "B", 0));
    Rng rx(derive_seed(ts, "X", 0));
    Rng rp(derive_seed(ts, "points", 0));
    InstanceFactors f{ginibre(n, ra), ginibre(n, rb), ginibre(n, rx), {}};
    std::uniform_real_distribution<double> u(std::log(1e-2), std::log(1e2));
    for (std::size_t i = 0; i < n; ++i) f.log_points.push_back(u(rp));
    return f;
}

Instance build_instance(InstanceKind kind, std::size_t n, double r, const NormSpec& spec,
                        const InstanceFactors& f, double pd_floor)
{
    const MatrixC placeholder = MatrixC::identity(1);
    switch (kind) {
    case InstanceKind::PsdPair:
        return {kind, n, r, spec, psd_from_factor(f.ga), psd_from_factor(f.gb), unit_spectral(f.gx), {}};
    case InstanceKind::GeneralTriple:
        return {kind, n, r, spec, unit_spectral(f.ga), unit_spectral(f.gb), unit_spectral(f.gx), {}};
    case InstanceKind::PdWithX:
        return {kind, n, r, spec, pd_from_factor(f.ga, pd_floor), placeholder, unit_spectral(f.gx), {}};
    case InstanceKind::Points: {
        std::vector<double> pts;
        for (double lp : f.log_points) pts.push_back(std::exp(lp));
        return {kind, n, r, spec, placeholder, placeholder, placeholder, std::move(pts)};
    }
    }
    throw Error(Errc::ConfigError, "unknown instance kind");
}

Instance make_instance(const std::string& suite_id, std::uint64_t master_seed, std::uint64_t trial, std::size_t n,
                       double r, const NormSpec& spec, double pd_floor)
{
    return build_instance(instance_kind(suite_id), n, r, spec, draw_factors(suite_id, master_seed, trial, n), pd_floor);
}

InequalityVerdict evaluate(const std::string& suite_id, const Instance& inst, const GridPoint& point,
                           const TrialConfig& config)
{
    TrialEvaluator eval(suite_id, inst, config);
    return eval(point);
}

bool RunReport::any_failure() const noexcept
{
    return std::any_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.failures > 0; });
}

RunReport run_suites(const TrialConfig& config)
{
    validate(config);
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.config = config;

    unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
    workers = std::clamp(workers, 1u, static_cast<unsigned>(config.trials));

    for (const auto& suite_id : config.suites) {
        const std::vector<GridPoint> grid = suite_grid(suite_id, config);
        std::vector<std::vector<TrialRecord>> per_trial(static_cast<std::size_t>(config.trials));
        std::atomic<int> next{0};
        auto work = [&] {
            for (int t = next++; t < config.trials; t = next++)
                per_trial[static_cast<std::size_t>(t)] = run_trial(suite_id, config, grid, t);
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        }
        report.suites.push_back(
            aggregate(suite_id, config.trials, static_cast<int>(grid.size()), std::move(per_trial)));
    }

    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

InequalityVerdict replay(const std::string& fingerprint, const Tolerances& tol, double pd_floor)
{
    std::map<std::string, std::string, std::less<>> kv;
    GridPoint point;
    for (auto field : split(fingerprint, ';')) {
        const auto eq = field.find('=');
        if (eq == std::string_view::npos) throw Error(Errc::ConfigError, "malformed fingerprint field '" + std::string(field) + "'");
        const std::string key(field.substr(0, eq));
        const std::string value(field.substr(eq + 1));
        if (key == "suite" || key == "seed" || key == "trial" || key == "n" || key == "r" || key == "norm" || key == "fn")
            kv[key] = value;
        else
            point.values.emplace_back(key, parse_double(value, "parameter"));
    }
    for (const char* key : {"suite", "seed", "trial", "n", "r", "norm"})
        if (!kv.count(key)) throw Error(Errc::ConfigError, std::string("fingerprint lacks '") + key + "'");
    if (kv.count("fn")) point.fn = kv["fn"];

    const std::string suite = kv["suite"];
    const auto seed = std::stoull(kv["seed"]);
    const auto trial = std::stoull(kv["trial"]);
    const auto n = static_cast<std::size_t>(std::stoul(kv["n"]));
    const double r = parse_double(kv["r"], "r");
    const NormSpec spec = NormSpec::parse(kv["norm"]);

    TrialConfig config;
    config.suites = {suite};
    config.tol = tol;
    config.pd_floor = pd_floor;
    const Instance inst = make_instance(suite, seed, trial, n, r, spec, pd_floor);
    return evaluate(suite, inst, point, config);
}

std::pair<int, int> parse_range(std::string_view text)
{
    const auto dash = text.find('-');
    auto to_int = [](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw Error(Errc::ConfigError, "cannot parse dimension '" + std::string(s) + "'");
        return v;
    };
    if (dash == std::string_view::npos) {
        const int v = to_int(text);
        if (v < 1) throw Error(Errc::ConfigError, "invalid dimension '" + std::string(text) + "'");
        return {v, v};
    }
    const int lo = to_int(text.substr(0, dash));
    const int hi = to_int(text.substr(dash + 1));
    if (lo < 1 || hi < lo) throw Error(Errc::ConfigError, "invalid dimension range '" + std::string(text) + "'");
    return {lo, hi};
}

std::vector<double> parse_double_list(std::string_view text)
{
    std::vector<double> out;
    for (auto part : split(text, ',')) out.push_back(parse_double(part, "number"));
    return out;
}

std::vector<NormSpec> parse_norm_list(std::string_view text)
{
    std::vector<NormSpec> out;
    for (auto part : split(text, ',')) {
        try {
            out.push_back(NormSpec::parse(part));
        } catch (const Error& e) {
            throw Error(Errc::ConfigError, e.what());
        }
    }
    return out;
}

std::vector<std::string> parse_suite_list(std::string_view text)
{
    if (text == "all") return all_suite_ids();
    std::vector<std::string> out;
    for (auto part : split(text, ',')) {
        if (part.empty()) continue;
        if (!is_suite_id(part)) throw Error(Errc::ConfigError, "unknown suite '" + std::string(part) + "'");
        out.emplace_back(part);
    }
    return out;
}

} // namespace csineq
