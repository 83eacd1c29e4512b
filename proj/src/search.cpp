#include "csineq/search.hpp"

#include "csineq/errors.hpp"
#include "csineq/random.hpp"
#include "csineq/report.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace csineq {

using nlohmann::json;

namespace {

constexpr double kInitialStep = 0.5;
constexpr double kMinStep = 1e-6;
constexpr int kFailuresPerShrink = 8;

void perturb(MatrixC& m, double step, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, step * std::sqrt(0.5));
    for (auto& z : m.entries()) {
        const double re = normal(rng);
        const double im = normal(rng);
        z += cplx(re, im);
    }
}

InstanceFactors perturbed(const InstanceFactors& f, InstanceKind kind, double step, Rng& rng)
{
    InstanceFactors out = f;
    switch (kind) {
    case InstanceKind::PsdPair:
    case InstanceKind::GeneralTriple:
        perturb(out.ga, step, rng);
        perturb(out.gb, step, rng);
        perturb(out.gx, step, rng);
        break;
    case InstanceKind::PdWithX:
        perturb(out.ga, step, rng);
        perturb(out.gx, step, rng);
        break;
    case InstanceKind::Points: {
        std::normal_distribution<double> normal(0.0, step);
        for (double& lp : out.log_points) lp = std::clamp(lp + normal(rng), std::log(1e-3), std::log(1e3));
        break;
    }
    }
    return out;
}

const char* kind_name(InstanceKind k)
{
    switch (k) {
    case InstanceKind::PsdPair: return "psd-pair";
    case InstanceKind::GeneralTriple: return "general-triple";
    case InstanceKind::PdWithX: return "pd-with-x";
    case InstanceKind::Points: return "points";
    }
    return "?";
}

InstanceKind kind_from_name(const std::string& s)
{
    for (auto k : {InstanceKind::PsdPair, InstanceKind::GeneralTriple, InstanceKind::PdWithX, InstanceKind::Points})
        if (s == kind_name(k)) return k;
    throw Error(Errc::ConfigError, "unknown instance kind '" + s + "'");
}

} // namespace

SearchResult search_counterexample(const std::string& suite_id, const TrialConfig& config, long budget,
                                   std::uint64_t seed)
{
    TrialConfig cfg = config;
    cfg.suites = {suite_id};
    validate(cfg);
    if (budget < 1) throw Error(Errc::ConfigError, "search budget must be >= 1");

    const InstanceKind kind = instance_kind(suite_id);
    const std::vector<GridPoint> grid = suite_grid(suite_id, cfg);
    const long per_restart = std::max(20L, budget / 8);
    Rng rng(derive_seed(seed, suite_id, 0));

    std::optional<SearchResult> best;
    long evals = 0;
    int restarts = 0;
    while (evals < budget) {
        ++restarts;
        const double r = cfg.r_values[rng() % cfg.r_values.size()];
        const NormSpec spec = cfg.norm_specs[rng() % cfg.norm_specs.size()];
        const int n_lo = std::max(cfg.n_min, spec.kind() == NormSpec::Kind::KyFan ? spec.k() : 1);
        const auto n = static_cast<std::size_t>(n_lo + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.n_max - n_lo + 1)));
        const GridPoint& point = grid[rng() % grid.size()];

        InstanceFactors factors = draw_factors(suite_id, seed, static_cast<std::uint64_t>(restarts), n);
        std::optional<Instance> cur;
        std::optional<InequalityVerdict> cur_v;
        double step = kInitialStep;
        int failures = 0;
        for (long local = 0; evals < budget && local < per_restart && step > kMinStep; ++local) {
            InstanceFactors cand = cur ? perturbed(factors, kind, step, rng) : factors;
            ++evals;
            try {
                Instance inst = build_instance(kind, n, r, spec, cand, cfg.pd_floor);
                InequalityVerdict v = evaluate(suite_id, inst, point, cfg);
                if (!cur_v || v.scaled_min_slack() < cur_v->scaled_min_slack()) {
                    if (cur) step = std::min(2.0, step * 1.5);
                    factors = std::move(cand);
                    cur = std::move(inst);
                    cur_v = std::move(v);
                    continue;
                }
            } catch (const Error&) {
                if (!cur) break;
            }
            if (++failures % kFailuresPerShrink == 0) step *= 0.5;
        }
        if (cur_v && (!best || cur_v->scaled_min_slack() < best->objective)) {
            const double obj = cur_v->scaled_min_slack();
            best = SearchResult{suite_id, *cur, point, std::move(*cur_v), obj, 0, 0, seed};
        }
    }
    if (!best) throw Error(Errc::ConfigError, "search found no evaluable instance for '" + suite_id + "'");
    best->evaluations = evals;
    best->restarts = restarts;
    return *best;
}

json matrix_to_json(const MatrixC& m)
{
    json re = json::array();
    json im = json::array();
    for (const auto& z : m.entries()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return {{"n", m.n()}, {"re", re}, {"im", im}};
}

MatrixC matrix_from_json(const json& j)
{
    const auto n = j.at("n").get<std::size_t>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != n * n || im.size() != n * n) throw Error(Errc::DimensionMismatch, "persisted matrix has wrong size");
    std::vector<cplx> e(n * n);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = cplx(re[i], im[i]);
    return MatrixC(n, std::move(e));
}

json search_to_json(const SearchResult& r)
{
    json params = json::object();
    for (const auto& [k, v] : r.point.values) params[k] = v;
    const Instance& in = r.instance;
    return {{"suite", r.suite_id},
            {"seed", r.seed},
            {"evaluations", r.evaluations},
            {"restarts", r.restarts},
            {"objective", r.objective},
            {"min_slack", r.verdict.min_slack()},
            {"params", params},
            {"fn", r.point.fn},
            {"instance",
             {{"kind", kind_name(in.kind)},
              {"n", in.n},
              {"r", in.r},
              {"norm", in.spec.str()},
              {"a", matrix_to_json(in.a)},
              {"b", matrix_to_json(in.b)},
              {"x", matrix_to_json(in.x)},
              {"points", in.points}}},
            {"verdict", verdict_to_json(r.verdict)}};
}

InequalityVerdict reevaluate(const json& p, const TrialConfig& config)
{
    const json& ij = p.at("instance");
    Instance inst{kind_from_name(ij.at("kind").get<std::string>()),
                  ij.at("n").get<std::size_t>(),
                  ij.at("r").get<double>(),
                  NormSpec::parse(ij.at("norm").get<std::string>()),
                  matrix_from_json(ij.at("a")),
                  matrix_from_json(ij.at("b")),
                  matrix_from_json(ij.at("x")),
                  ij.at("points").get<std::vector<double>>()};
    GridPoint point;
    for (const auto& [k, v] : p.at("params").items()) point.values.emplace_back(k, v.get<double>());
    point.fn = p.at("fn").get<std::string>();
    return evaluate(p.at("suite").get<std::string>(), inst, point, config);
}

} // namespace csineq
