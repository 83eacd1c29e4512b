#include "csineq/errors.hpp"
#include "csineq/harness.hpp"
#include "csineq/inequalities.hpp"
#include "csineq/report.hpp"
#include "csineq/search.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace csineq;

namespace {

struct CommonOptions {
    std::string n = "1-6";
    std::string r = "0.5,1,2,3";
    std::string norms = "trace,frobenius,spectral,schatten:3,kyfan:2";
    std::uint64_t seed = 20140523;
    double tol = 1e-8;
    double omega_tol = 1e-8;
    double quad_tol = 1e-9;
    double pd_floor = 0.05;
    std::string out;
};

void add_common(CLI::App* app, CommonOptions& o)
{
    app->add_option("--n", o.n, "Dimension or range, e.g. 4 or 1-6");
    app->add_option("--r", o.r, "Comma-separated exponents r > 0");
    app->add_option("--norms", o.norms, "Comma-separated norms: trace, frobenius, spectral, schatten:p, kyfan:k");
    app->add_option("--seed", o.seed, "Master seed");
    app->add_option("--tol", o.tol, "Relative slack tolerance");
    app->add_option("--omega-tol", o.omega_tol, "Numerical radius tolerance (relative to spectral norm)");
    app->add_option("--quad-tol", o.quad_tol, "Quadrature tolerance");
    app->add_option("--pd-floor", o.pd_floor, "Eigenvalue floor for positive definite draws");
    app->add_option("--out", o.out, "Output file (default stdout)");
}

TrialConfig make_config(const CommonOptions& o)
{
    TrialConfig c;
    auto [lo, hi] = parse_range(o.n);
    c.n_min = lo;
    c.n_max = hi;
    c.r_values = parse_double_list(o.r);
    c.norm_specs = parse_norm_list(o.norms);
    c.master_seed = o.seed;
    c.tol.rel = o.tol;
    c.tol.omega = o.omega_tol;
    c.tol.quad = o.quad_tol;
    c.pd_floor = o.pd_floor;
    return c;
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error(Errc::ConfigError, "cannot open '" + path + "' for writing");
    f << text;
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Matrix Cauchy-Schwarz inequality verification harness"};
    app.require_subcommand(1);

    CommonOptions vo;
    std::string suites = "all";
    int trials = 200;
    int threads = 0;
    std::string format = "json";
    bool no_timing = false;
    auto* verify = app.add_subcommand("verify", "Run randomized verification suites");
    add_common(verify, vo);
    verify->add_option("--suites", suites, "'all' or comma-separated suite ids");
    verify->add_option("--trials", trials, "Trials per suite");
    verify->add_option("--threads", threads, "Worker threads (0 = hardware)");
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--no-timing", no_timing, "Omit wall time from JSON output");

    CommonOptions so;
    std::string search_suite;
    long budget = 2000;
    auto* search = app.add_subcommand("search", "Hill-climbing counterexample search for one suite");
    add_common(search, so);
    search->add_option("--suite", search_suite, "Suite id")->required();
    search->add_option("--budget", budget, "Number of verdict evaluations");

    CommonOptions co;
    std::string curve_suite = "convexity-f";
    int grid = 0;
    auto* curve = app.add_subcommand("curve", "Sample f(t) or G(s,t) for one random instance as CSV");
    add_common(curve, co);
    curve->add_option("--suite", curve_suite, "convexity-f or convexity-G")
        ->check(CLI::IsMember({"convexity-f", "convexity-G"}));
    curve->add_option("--grid", grid, "Grid size (default 101 for f, 21 for G)");

    std::string fingerprint;
    CommonOptions ro;
    auto* rep = app.add_subcommand("replay", "Re-evaluate a trial fingerprint or a saved search result");
    add_common(rep, ro);
    rep->add_option("fingerprint", fingerprint, "Fingerprint string, or @file.json for a search result")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            TrialConfig c = make_config(vo);
            c.suites = parse_suite_list(suites);
            c.trials = trials;
            c.threads = threads;
            RunReport report = run_suites(c);
            if (format == "csv")
                emit(vo.out, to_csv(report));
            else
                emit(vo.out, to_json(report, !no_timing).dump(2) + "\n");
            for (const auto& s : report.suites)
                std::cerr << s.id << ": " << s.passes << " pass, " << s.failures << " fail\n";
            return report.any_failure() ? 1 : 0;
        }
        if (*search) {
            TrialConfig c = make_config(so);
            if (!is_suite_id(search_suite)) throw Error(Errc::ConfigError, "unknown suite '" + search_suite + "'");
            SearchResult r = search_counterexample(search_suite, c, budget, so.seed);
            emit(so.out, search_to_json(r).dump(2) + "\n");
            std::cerr << search_suite << ": best scaled slack " << r.objective << " after " << r.evaluations
                      << " evaluations, " << r.restarts << " restarts\n";
            return r.verdict.pass ? 0 : 1;
        }
        if (*curve) {
            TrialConfig c = make_config(co);
            const auto [lo, hi] = parse_range(co.n);
            (void)lo;
            const NormSpec spec = c.norm_specs.front();
            Instance inst = make_instance(curve_suite, c.master_seed, 0, static_cast<std::size_t>(hi),
                                          c.r_values.front(), spec, c.pd_floor);
            HeinzEvaluator ev(inst.a, inst.b, inst.x, inst.r, spec);
            std::ostringstream os;
            if (curve_suite == "convexity-f") {
                os << "t,f\n";
                for (const auto& [t, f] : heinz_curve(ev, grid > 0 ? grid : 101).samples)
                    os << fmt(t) << ',' << fmt(f) << '\n';
            } else {
                TwoParamSurface g = surface_G(ev, grid > 0 ? grid : 21);
                os << "s,t,G\n";
                for (int i = 0; i < g.grid_n; ++i)
                    for (int j = 0; j < g.grid_n; ++j)
                        os << fmt(g.nodes[static_cast<std::size_t>(i)]) << ','
                           << fmt(g.nodes[static_cast<std::size_t>(j)]) << ',' << fmt(g.at(i, j)) << '\n';
            }
            emit(co.out, os.str());
            return 0;
        }
        if (*rep) {
            TrialConfig c = make_config(ro);
            InequalityVerdict v;
            if (!fingerprint.empty() && fingerprint.front() == '@') {
                std::ifstream f(fingerprint.substr(1));
                if (!f) throw Error(Errc::ConfigError, "cannot read '" + fingerprint.substr(1) + "'");
                v = reevaluate(nlohmann::json::parse(f), c);
            } else {
                v = replay(fingerprint, c.tol, c.pd_floor);
            }
            emit(ro.out, verdict_to_json(v).dump(2) + "\n");
            return v.pass ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
