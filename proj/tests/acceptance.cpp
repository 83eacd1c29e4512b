// Acceptance run: one PASS/FAIL line per criterion at the pinned tolerances.

#include "csineq/errors.hpp"
#include "csineq/generators.hpp"
#include "csineq/harness.hpp"
#include "csineq/inequalities.hpp"
#include "csineq/linalg.hpp"
#include "csineq/norms.hpp"
#include "csineq/random.hpp"
#include "csineq/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace csineq;

namespace {

int g_failed = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail)
{
    std::printf("%s [%2d] %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failed;
}

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

TrialConfig config_for(std::vector<std::string> suites, int trials)
{
    TrialConfig c;
    c.suites = std::move(suites);
    c.trials = trials;
    return c;
}

/// "passes/total, min scaled slack" for one suite.
std::string summary(const SuiteReport& s)
{
    std::ostringstream os;
    os << s.id << " " << s.passes << "/" << s.trials * s.grid_size;
    if (s.min_scaled_slack) os << ", min scaled slack " << fmt("%.3g", *s.min_scaled_slack);
    return os.str();
}

bool all_pass(const SuiteReport& s) { return s.failures == 0 && s.passes == s.trials * s.grid_size; }

void criterion_1()
{
    const RunReport r = run_suites(config_for({"cs-basic"}, 200));
    const SuiteReport& s = r.suites[0];
    double worst_half = 0.0;
    int half_count = 0;
    for (const auto& rec : s.records) {
        if (!rec.verdict || rec.point.get("mu") != 0.5) continue;
        ++half_count;
        worst_half = std::max(worst_half, std::abs(rec.verdict->slacks[0]) / rec.verdict->scale());
    }
    const bool ok = all_pass(s) && s.trials == 200 && s.min_scaled_slack.value_or(-1.0) >= -1e-8 && half_count == 200 &&
                    worst_half <= 1e-9;
    report(1, ok, "refinement chain f(1/2) <= f(mu) <= f(0)",
           summary(s) + ", max |first slack|/scale at mu=1/2 " + fmt("%.3g", worst_half));
}

void criterion_2()
{
    const RunReport r = run_suites(config_for({"bhatia-davis"}, 200));
    const SuiteReport& s = r.suites[0];
    std::set<double> rs;
    std::set<std::string> norms;
    for (const auto& rec : s.records) {
        rs.insert(rec.r);
        norms.insert(rec.norm);
    }
    const bool ok = all_pass(s) && s.trials == 200 && rs.size() == 4 && norms.size() == 5;
    report(2, ok, "general-operand norm product bound",
           summary(s) + ", r values " + std::to_string(rs.size()) + ", norms " + std::to_string(norms.size()));
}

void criterion_3()
{
    TrialConfig c = config_for({"hh-chain"}, 200);
    c.tol.quad = 1e-9;
    const RunReport r = run_suites(c);
    const SuiteReport& s = r.suites[0];
    double worst = 0.0;
    int limit_count = 0;
    for (const auto& rec : s.records) {
        if (!rec.verdict || rec.point.get("mu") != 0.5) continue;
        const NormSpec spec = NormSpec::parse(rec.norm);
        const Instance in = make_instance("hh-chain", c.master_seed, static_cast<std::uint64_t>(rec.trial), rec.n, rec.r,
                                          spec, c.pd_floor);
        const double direct = uinorm_abs_pow(psd_power(in.a, 0.5) * in.x * psd_power(in.b, 0.5), rec.r, spec);
        const double sq = direct * direct;
        for (const auto& link : rec.verdict->links)
            worst = std::max(worst, std::abs(link.value - sq) / std::max(1.0, sq));
        ++limit_count;
    }
    const bool ok = all_pass(s) && limit_count == 200 && worst <= 1e-7;
    report(3, ok, "four-term integral-mean chain (quad tol 1e-9)",
           summary(s) + ", limit path vs direct f(1/2) max rel diff " + fmt("%.3g", worst));
}

void criterion_4()
{
    TrialConfig g = config_for({"convexity-G"}, 100);
    g.surface_grid = 11;
    const SuiteReport sg = run_suites(g).suites[0];
    const SuiteReport sc = run_suites(config_for({"corner-max"}, 200)).suites[0];
    const bool ok = all_pass(sg) && sg.trials == 100 && all_pass(sc) && sc.trials == 200;
    report(4, ok, "two-parameter convexity on 11x11 grid, argmin at center, corner-max bound",
           summary(sg) + "; " + summary(sc));
}

void criterion_5()
{
    TrialConfig c = config_for({"dragomir-2d", "dragomir-2d-cor26"}, 100);
    c.tol.quad = 1e-8;
    c.grid.alpha_beta = {{0.0, 0.0}, {0.25, 0.25}};
    const RunReport r = run_suites(c);
    const bool ok = all_pass(r.suites[0]) && all_pass(r.suites[1]) && r.suites[0].trials == 100 &&
                    r.suites[1].trials == 100 && r.suites[0].grid_size == 2;
    report(5, ok, "two-dimensional integral-mean chain (quad tol 1e-8)",
           summary(r.suites[0]) + "; " + summary(r.suites[1]));
}

void criterion_6()
{
    TrialConfig phi = config_for({"jensen-phi"}, 100);
    phi.tol.rel = 1e-9;
    phi.curve_grid = 21;
    const SuiteReport sp = run_suites(phi).suites[0];
    const RunReport gaps = run_suites(config_for({"thm32", "thm33"}, 200));
    int unreduced = 0;
    for (const auto& rec : gaps.suites[0].records)
        if (rec.verdict)
            for (const auto& note : rec.verdict->notes)
                if (note.find("unreduced-form") != std::string::npos) ++unreduced;
    const bool ok = all_pass(sp) && sp.trials == 100 && all_pass(gaps.suites[0]) && all_pass(gaps.suites[1]) &&
                    gaps.suites[0].trials == 200 && gaps.suites[1].trials == 200;
    report(6, ok, "phi monotone on both halves (tol 1e-9), gap chains with reduced mu",
           summary(sp) + "; " + summary(gaps.suites[0]) + "; " + summary(gaps.suites[1]) +
               "; unreduced-form violations logged: " + std::to_string(unreduced));
}

void criterion_7()
{
    Rng rng(derive_seed(7, "normal", 0));
    std::normal_distribution<double> normal;
    double worst_normal = 0.0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 6);
        // Unitary from the eigenvectors of a random Hermitian matrix.
        const MatrixC h = hermitian_part(ginibre(n, rng));
        const MatrixC u = herm_eig(h).vectors;
        std::vector<cplx> lambda(n);
        double max_mod = 0.0;
        for (auto& l : lambda) {
            l = cplx(normal(rng), normal(rng));
            max_mod = std::max(max_mod, std::abs(l));
        }
        const MatrixC a = u * MatrixC::diag(std::span<const cplx>(lambda)) * adjoint(u);
        worst_normal = std::max(worst_normal, std::abs(numerical_radius(a).value - max_mod));
    }

    const MatrixC nil = MatrixC::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    const double w_nil = numerical_radius(nil).value;
    double oracle = 0.0;
    for (int i = 0; i <= 200000; ++i) {
        const double t = 0.5 * M_PI * i / 200000.0;
        oracle = std::max(oracle, std::cos(t) * std::sin(t));
    }

    double worst_excess = -1.0;
    long pairs = 0;
    for (int m = 0; m < 200; ++m) {
        const MatrixC a = gen_general(1 + static_cast<std::size_t>(m % 6), derive_seed(7, "lower", m));
        const double w = numerical_radius(a).value;
        const double lb = numerical_radius_lower_bound(a, 500, derive_seed(7, "vectors", m));
        worst_excess = std::max(worst_excess, lb - w);
        pairs += 500;
    }
    const bool ok = worst_normal <= 2e-8 && std::abs(w_nil - 0.5) <= 1e-6 && std::abs(w_nil - oracle) <= 1e-6 &&
                    worst_excess <= 1e-8 && pairs >= 100000;
    report(7, ok, "numerical radius engine",
           "normal max err " + fmt("%.3g", worst_normal) + ", nilpotent " + fmt("%.12f", w_nil) + " (oracle " +
               fmt("%.12f", oracle) + "), max lower-bound excess " + fmt("%.3g", worst_excess) + " over " +
               std::to_string(pairs) + " pairs");
}

void criterion_8()
{
    double worst_search = -1e300;
    double worst_candidate = 0.0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 5);
        const MatrixC a = gen_psd(n, derive_seed(8, "psd", i));
        const double exact = schur_norm_omega_psd(a);
        const double found = schur_norm_omega_search(a, 40, derive_seed(8, "search", i));
        worst_search = std::max(worst_search, found - exact);
        double best_candidate = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            MatrixC e(n);
            e(k, k) = 1.0;
            best_candidate = std::max(best_candidate, numerical_radius(hadamard(a, e), 1e-13).value /
                                                          numerical_radius(e, 1e-13).value);
        }
        worst_candidate = std::max(worst_candidate, std::abs(best_candidate - exact));
    }
    const bool ok = worst_search <= 1e-6 && worst_candidate <= 1e-9;
    report(8, ok, "Schur multiplier norm equals max diagonal entry",
           "max search excess " + fmt("%.3g", worst_search) + ", max candidate gap " + fmt("%.3g", worst_candidate));
}

void criterion_9()
{
    TrialConfig c = config_for({"thm43", "cor44", "example45"}, 200);
    c.tol.omega = 1e-8;
    const RunReport r = run_suites(c);
    bool ok = true;
    std::string detail;
    for (const auto& s : r.suites) {
        ok = ok && all_pass(s) && s.trials == 200;
        detail += summary(s) + "; ";
    }
    // Every thm43 grid point carries a Kwong check on the spectrum; a failed check would surface as an error.
    std::set<std::string> pairs;
    for (const auto& rec : r.suites[0].records) pairs.insert(rec.point.fn);
    ok = ok && pairs.size() >= 12;

    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 6);
        const MatrixC a = gen_pd(n, derive_seed(9, "commuting", i));
        const InequalityVerdict v = check_example45(a, MatrixC::identity(n), c.tol);
        const double allowed = 4.0 * c.tol.omega * std::max(1.0, v.links[1].value);
        worst = std::max(worst, std::abs(v.links[0].value - v.links[1].value) / allowed);
    }
    ok = ok && worst <= 1.0;
    report(9, ok, "numerical radius bound for Kwong pairs (omega tol 1e-8)",
           detail + std::to_string(pairs.size()) + " f/g pairs; commuting case max |diff| / (4 omega tol) " +
               fmt("%.3g", worst));
}

void criterion_10()
{
    std::vector<ScalarFn> fns{ScalarFn::sqrt(), ScalarFn::log1p()};
    for (int k = 1; k <= 9; ++k) fns.push_back(ScalarFn::power(0.1 * k));
    int positives = 0;
    int total = 0;
    for (int i = 0; i < 50; ++i) {
        Rng rng(derive_seed(10, "points", i));
        std::uniform_real_distribution<double> u(std::log(1e-2), std::log(1e2));
        std::vector<double> pts(2 + static_cast<std::size_t>(i % 5));
        for (double& p : pts) p = std::exp(u(rng));
        for (const auto& f : fns) {
            ++total;
            if (is_kwong_sample(pts, f)) ++positives;
        }
    }
    const std::vector<double> cube_pts{0.1, 10.0};
    const bool cube = is_kwong_sample(cube_pts, ScalarFn::power(3.0));
    const bool ok = positives == total && !cube;
    report(10, ok, "Kwong detector",
           std::to_string(positives) + "/" + std::to_string(total) + " positive samples accepted; t^3 on (0.1, 10) " +
               (cube ? "accepted" : "rejected"));
}

void criterion_11()
{
    TrialConfig c = config_for(all_suite_ids(), 3);
    c.grid.alpha_beta = {{0.2, 0.2}};
    const std::string first = to_json(run_suites(c), false).dump();
    const std::string second = to_json(run_suites(c), false).dump();
    c.threads = 2;
    const std::string threaded = to_json(run_suites(c), false).dump();
    const bool ok = first == second && first == threaded;
    report(11, ok, "determinism", std::string("identical JSON bodies across runs: ") + (first == second ? "yes" : "no") +
                                      ", across thread counts: " + (first == threaded ? "yes" : "no") + " (" +
                                      std::to_string(first.size()) + " bytes)");
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    const std::function<void()> criteria[] = {criterion_1, criterion_2, criterion_3, criterion_4,
                                              criterion_5, criterion_6, criterion_7, criterion_8,
                                              criterion_9, criterion_10, criterion_11};
    int id = 1;
    for (const auto& run : criteria) {
        try {
            run();
        } catch (const std::exception& e) {
            report(id, false, "criterion raised", e.what());
        }
        ++id;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of 11 criteria passed in %.1f s\n", 11 - g_failed, secs);
    return g_failed == 0 ? 0 : 1;
}
