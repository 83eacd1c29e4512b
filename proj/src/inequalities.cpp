#include "csineq/inequalities.hpp"

#include "csineq/errors.hpp"
#include "csineq/quadrature.hpp"
#include "csineq/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>

namespace csineq {

namespace {

constexpr std::size_t kCacheLimit = 4096;
constexpr double kLimitWidth = 1e-6;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void require_unit(double v, const char* name)
{
    if (!(v >= 0.0 && v <= 1.0)) throw Error(Errc::InvalidParams, std::string(name) + " must lie in [0, 1]");
}

void require_open_unit(double v, const char* name)
{
    if (!(v > 0.0 && v < 1.0)) throw Error(Errc::InvalidParams, std::string(name) + " must lie in (0, 1)");
}

} // namespace

double InequalityVerdict::scale() const noexcept
{
    double s = 1.0;
    for (const auto& l : links) s = std::max(s, std::abs(l.value));
    return s;
}

double InequalityVerdict::min_slack() const noexcept
{
    if (slacks.empty()) return 0.0;
    return *std::min_element(slacks.begin(), slacks.end());
}

double InequalityVerdict::scaled_min_slack() const noexcept { return min_slack() / scale(); }

double InequalityVerdict::margin() const noexcept
{
    const double sc = scale();
    return (min_slack() + tol_used * sc + abs_tol) / sc;
}

InequalityVerdict make_verdict(std::string suite_id, std::vector<Link> links, double tol_rel, double abs_tol,
                               std::uint64_t fingerprint)
{
    InequalityVerdict v;
    v.suite_id = std::move(suite_id);
    v.links = std::move(links);
    v.tol_used = tol_rel;
    v.abs_tol = abs_tol;
    v.instance_fingerprint = fingerprint;
    for (std::size_t i = 0; i + 1 < v.links.size(); ++i) v.slacks.push_back(v.links[i + 1].value - v.links[i].value);
    const double allowance = tol_rel * v.scale() + abs_tol;
    v.pass = std::all_of(v.slacks.begin(), v.slacks.end(), [&](double s) { return s >= -allowance; });
    for (const auto& l : v.links)
        if (!std::isfinite(l.value)) v.pass = false;
    return v;
}

InequalityVerdict binding_verdict(std::vector<InequalityVerdict> chains)
{
    if (chains.empty()) throw Error(Errc::InvalidParams, "binding_verdict: no chains");
    bool all_pass = true;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        all_pass = all_pass && chains[i].pass;
        if (chains[i].margin() < chains[worst].margin()) worst = i;
    }
    InequalityVerdict v = std::move(chains[worst]);
    v.pass = all_pass;
    return v;
}

Fingerprint& Fingerprint::add(const MatrixC& m)
{
    add(static_cast<double>(m.n()));
    for (const auto& z : m.entries()) {
        add(z.real());
        add(z.imag());
    }
    return *this;
}

Fingerprint& Fingerprint::add(double v)
{
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
        h_ ^= (bits >> (8 * i)) & 0xffU;
        h_ *= 0x100000001b3ULL;
    }
    return *this;
}

Fingerprint& Fingerprint::add(std::string_view s)
{
    h_ = fnv1a(s, h_);
    return *this;
}

HeinzEvaluator::HeinzEvaluator(const MatrixC& a, const MatrixC& b, const MatrixC& x, double r, NormSpec spec)
    : a_(a), b_(b), x_(x), r_(r), spec_(spec), fingerprint_(0)
{
    if (a.n() != x.n() || b.n() != x.n()) throw Error(Errc::DimensionMismatch, "HeinzEvaluator: A, B, X sizes differ");
    if (!(r >= 0.0) || !std::isfinite(r)) throw Error(Errc::InvalidParams, "exponent r must be finite and >= 0");
    x_.require_finite("HeinzEvaluator");
    fingerprint_ = Fingerprint().add(a).add(b).add(x).add(r).add(spec.str()).value();
}

const MatrixC& HeinzEvaluator::left(double a_exp) const
{
    auto it = left_cache_.find(a_exp);
    if (it != left_cache_.end()) return it->second;
    if (left_cache_.size() >= kCacheLimit) left_cache_.clear();
    return left_cache_.emplace(a_exp, a_.power(a_exp) * x_).first->second;
}

const MatrixC& HeinzEvaluator::right(double b_exp) const
{
    auto it = right_cache_.find(b_exp);
    if (it != right_cache_.end()) return it->second;
    if (right_cache_.size() >= kCacheLimit) right_cache_.clear();
    return right_cache_.emplace(b_exp, b_.power(b_exp)).first->second;
}

double HeinzEvaluator::norm_of(double a_exp, double b_exp) const
{
    // References into unordered_map survive inserts into the other cache.
    const MatrixC& l = left(a_exp);
    const MatrixC& rgt = right(b_exp);
    return uinorm_abs_pow(l * rgt, r_, spec_);
}

double HeinzEvaluator::pair(double a_exp, double b_exp) const
{
    return norm_of(a_exp, b_exp) * norm_of(1.0 - a_exp, 1.0 - b_exp);
}

double heinz_f(const MatrixC& a, const MatrixC& b, const MatrixC& x, double r, const NormSpec& spec, double t)
{
    require_unit(t, "t");
    return HeinzEvaluator(a, b, x, r, spec).f(t);
}

HeinzCurve heinz_curve(const HeinzEvaluator& ev, int k)
{
    if (k < 2) throw Error(Errc::InvalidParams, "heinz_curve: need at least two samples");
    HeinzCurve c{ev.r(), ev.spec(), {}};
    for (int i = 0; i < k; ++i) {
        const double t = static_cast<double>(i) / (k - 1);
        c.samples.emplace_back(t, ev.f(t));
    }
    return c;
}

TwoParamSurface surface_G(const HeinzEvaluator& ev, int grid_n)
{
    if (grid_n < 3 || grid_n % 2 == 0) throw Error(Errc::InvalidParams, "surface_G: grid_n must be odd and >= 3");
    TwoParamSurface s{grid_n, {}, {}};
    for (int i = 0; i < grid_n; ++i) s.nodes.push_back(static_cast<double>(i) / (grid_n - 1));
    s.values.reserve(static_cast<std::size_t>(grid_n * grid_n));
    for (int i = 0; i < grid_n; ++i)
        for (int j = 0; j < grid_n; ++j) s.values.push_back(ev.surface(s.nodes[i], s.nodes[j]));
    return s;
}

InequalityVerdict check_cs_basic(const HeinzEvaluator& ev, double mu, const Tolerances& tol)
{
    require_unit(mu, "mu");
    return make_verdict("cs-basic",
                        {{"f(1/2)", ev.f(0.5)}, {"f(" + num(mu) + ")", ev.f(mu)}, {"f(0)", ev.f(0.0)}},
                        tol.rel, 0.0, Fingerprint().add(ev.fingerprint()).add(mu).value());
}

InequalityVerdict check_bhatia_davis(const MatrixC& a, const MatrixC& b, const MatrixC& x, double r,
                                     const NormSpec& spec, const Tolerances& tol)
{
    const double lhs = uinorm_abs_pow(adjoint(a) * x * b, r, spec);
    const double rhs = uinorm_abs_pow(a * adjoint(a) * x, r, spec) * uinorm_abs_pow(x * b * adjoint(b), r, spec);
    const auto fp = Fingerprint().add(a).add(b).add(x).add(r).add(spec.str()).value();
    return make_verdict("bhatia-davis", {{"|||A*XB|||^2", lhs * lhs}, {"|||AA*X||| |||XBB*|||", rhs}}, tol.rel, 0.0,
                        fp);
}

InequalityVerdict check_hermite_hadamard(const std::function<double(double)>& g, double a, double b,
                                         const Tolerances& tol)
{
    if (!(a < b)) throw Error(Errc::InvalidParams, "check_hermite_hadamard: requires a < b");
    const double mid = 0.5 * (a + b);
    const double gm = g(mid);
    const double ga = g(a);
    const double gb = g(b);
    const double mean = integrate_1d(g, a, b, tol.quad * (b - a)).value / (b - a);
    return make_verdict("hermite-hadamard",
                        {{"g(mid)", gm},
                         {"mean", mean},
                         {"(g(a)+2g(mid)+g(b))/4", 0.25 * (ga + 2.0 * gm + gb)},
                         {"(g(a)+g(b))/2", 0.5 * (ga + gb)}},
                        tol.rel, tol.quad, Fingerprint().add(a).add(b).value());
}

InequalityVerdict check_hh_chain(const HeinzEvaluator& ev, double mu, const Tolerances& tol)
{
    require_unit(mu, "mu");
    const auto fp = Fingerprint().add(ev.fingerprint()).add(mu).value();
    const double fhalf = ev.f(0.5);
    const double width = std::abs(1.0 - 2.0 * mu);
    if (width < kLimitWidth) {
        return make_verdict("hh-chain",
                            {{"f(1/2)", fhalf},
                             {"mean (limit)", fhalf},
                             {"(f(1/2)+f(mu))/2 (limit)", fhalf},
                             {"f(mu) (limit)", fhalf}},
                            tol.rel, tol.quad, fp);
    }
    const double lo = std::min(mu, 1.0 - mu);
    const double hi = std::max(mu, 1.0 - mu);
    auto f = [&](double s) { return ev.f(s); };
    const double mean = integrate_1d(f, lo, hi, tol.quad * (hi - lo)).value / (hi - lo);
    // f(mu) = f(1 - mu); evaluating at lo keeps mu and 1 - mu bit-identical.
    const double fmu = ev.f(lo);
    InequalityVerdict v = make_verdict("hh-chain",
                                       {{"f(1/2)", fhalf},
                                        {"mean f on [" + num(lo) + "," + num(hi) + "]", mean},
                                        {"(f(1/2)+f(mu))/2", 0.5 * (fhalf + fmu)},
                                        {"f(mu)", fmu}},
                                       tol.rel, tol.quad, fp);

    // The general four-term chain on f itself, endpoints evaluated separately.
    const double flo = fmu;
    const double fhi = ev.f(hi);
    const InequalityVerdict lemma = make_verdict(
        "hh-chain", {{"f(mid)", fhalf}, {"mean", mean}, {"(f(a)+2f(mid)+f(b))/4", 0.25 * (flo + 2.0 * fhalf + fhi)},
                     {"(f(a)+f(b))/2", 0.5 * (flo + fhi)}},
        tol.rel, tol.quad, fp);
    if (!lemma.pass) {
        v.pass = false;
        v.notes.push_back("general Hermite-Hadamard chain fails, min slack " + num(lemma.min_slack()));
    }
    return v;
}

InequalityVerdict check_corner_max(const HeinzEvaluator& ev, double s, double t, const Tolerances& tol)
{
    require_unit(s, "s");
    require_unit(t, "t");
    const MatrixC& a = ev.a();
    const MatrixC& b = ev.b();
    const MatrixC& x = ev.x();
    const double r = ev.r();
    const NormSpec& spec = ev.spec();
    const double c1 = uinorm_abs_pow(a * x, r, spec) * uinorm_abs_pow(x * b, r, spec);
    const double c2 = uinorm_abs_pow(a * x * b, r, spec) * uinorm_abs_pow(x, r, spec);
    return make_verdict("corner-max",
                        {{"G(1/2,1/2)", ev.surface(0.5, 0.5)},
                         {"G(" + num(s) + "," + num(t) + ")", ev.surface(s, t)},
                         {c1 >= c2 ? "|||AX||| |||XB|||" : "|||AXB||| |||X|||", std::max(c1, c2)}},
                        tol.rel, 0.0, Fingerprint().add(ev.fingerprint()).add(s).add(t).value());
}

InequalityVerdict check_dragomir_2d(const HeinzEvaluator& ev, double alpha, double beta, const Tolerances& tol)
{
    require_unit(alpha, "alpha");
    require_unit(beta, "beta");
    const bool below = alpha < 0.5 && beta < 0.5;
    const bool above = alpha > 0.5 && beta > 0.5;
    if (!below && !above)
        throw Error(Errc::InvalidParams, "check_dragomir_2d: alpha and beta must lie on the same side of 1/2");

    const double s_lo = std::min(alpha, 1.0 - alpha);
    const double s_hi = std::max(alpha, 1.0 - alpha);
    const double t_lo = std::min(beta, 1.0 - beta);
    const double t_hi = std::max(beta, 1.0 - beta);
    const double ws = s_hi - s_lo;
    const double wt = t_hi - t_lo;

    const double mean_s = integrate_1d([&](double s) { return ev.kernel(s, 0.5); }, s_lo, s_hi, tol.quad * ws).value / ws;
    const double mean_t = integrate_1d([&](double t) { return ev.kernel(0.5, t); }, t_lo, t_hi, tol.quad * wt).value / wt;
    const double mean_2d =
        integrate_2d([&](double s, double t) { return ev.kernel(s, t); }, Box{s_lo, s_hi, t_lo, t_hi},
                     tol.quad * ws * wt)
            .value /
        (ws * wt);
    const double corners = ev.kernel(alpha, beta) + ev.kernel(1.0 - alpha, beta);

    return make_verdict("dragomir-2d",
                        {{"2 f(1/2)", 2.0 * ev.kernel(0.5, 0.5)},
                         {"mean_s + mean_t", mean_s + mean_t},
                         {"2 mean_2d", 2.0 * mean_2d},
                         {"corner sum", corners}},
                        tol.rel, 4.0 * tol.quad, Fingerprint().add(ev.fingerprint()).add(alpha).add(beta).value());
}

InequalityVerdict check_convexity_f(const HeinzEvaluator& ev, int grid_k, const Tolerances& tol)
{
    if (grid_k < 3 || grid_k % 2 == 0) throw Error(Errc::InvalidParams, "check_convexity_f: grid_k must be odd and >= 3");
    const HeinzCurve curve = heinz_curve(ev, grid_k);
    const auto fp = ev.fingerprint();
    const int mid = grid_k / 2;
    const double fmid = curve.samples[mid].second;

    std::vector<InequalityVerdict> chains;
    for (int i = 0; i < grid_k; ++i) {
        const auto [ti, fi] = curve.samples[i];
        if (i != mid) chains.push_back(make_verdict("convexity-f", {{"f(1/2)", fmid}, {"f(" + num(ti) + ")", fi}}, tol.rel, 0.0, fp));
        for (int j = i + 2; j < grid_k; j += 2) {
            const auto [tj, fj] = curve.samples[j];
            const auto [tm, fm] = curve.samples[(i + j) / 2];
            chains.push_back(make_verdict(
                "convexity-f",
                {{"f(" + num(tm) + ")", fm}, {"(f(" + num(ti) + ")+f(" + num(tj) + "))/2", 0.5 * (fi + fj)}}, tol.rel,
                0.0, fp));
        }
    }
    return binding_verdict(std::move(chains));
}

InequalityVerdict check_convexity_G(const HeinzEvaluator& ev, int grid_n, const Tolerances& tol)
{
    const TwoParamSurface g = surface_G(ev, grid_n);
    const auto fp = ev.fingerprint();
    const int c = grid_n / 2;
    const double gc = g.at(c, c);
    auto label = [&](int i, int j) { return "G(" + num(g.nodes[i]) + "," + num(g.nodes[j]) + ")"; };

    std::vector<InequalityVerdict> chains;
    constexpr int dirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            if (i != c || j != c)
                chains.push_back(make_verdict("convexity-G", {{"G(1/2,1/2)", gc}, {label(i, j), g.at(i, j)}}, tol.rel, 0.0, fp));
            if (i == 0 || j == 0 || i == grid_n - 1 || j == grid_n - 1) continue;
            for (const auto& d : dirs) {
                const int i1 = i + d[0], j1 = j + d[1], i2 = i - d[0], j2 = j - d[1];
                chains.push_back(make_verdict(
                    "convexity-G",
                    {{label(i, j), g.at(i, j)},
                     {"(" + label(i1, j1) + "+" + label(i2, j2) + ")/2", 0.5 * (g.at(i1, j1) + g.at(i2, j2))}},
                    tol.rel, 0.0, fp));
            }
        }
    }
    return binding_verdict(std::move(chains));
}

double jensen_phi(const std::function<double(double)>& f, double delta, double p, double t)
{
    return (1.0 - p) * f(delta) + p * f(t) - f((1.0 - p) * delta + p * t);
}

double jensen_phi(const HeinzEvaluator& ev, double delta, double p, double t)
{
    return jensen_phi([&](double u) { return ev.f(u); }, delta, p, t);
}

InequalityVerdict check_jensen_phi(const HeinzEvaluator& ev, double delta, double p, int grid_k, const Tolerances& tol)
{
    require_unit(delta, "delta");
    require_open_unit(p, "p");
    if (grid_k < 3) throw Error(Errc::InvalidParams, "check_jensen_phi: grid_k must be >= 3");
    const auto fp = Fingerprint().add(ev.fingerprint()).add(delta).add(p).value();

    std::vector<double> ts(static_cast<std::size_t>(grid_k));
    std::vector<double> phi(ts.size());
    for (int i = 0; i < grid_k; ++i) {
        ts[i] = static_cast<double>(i) / (grid_k - 1);
        phi[i] = jensen_phi(ev, delta, p, ts[i]);
    }
    auto lab = [&](int i) { return "phi(" + num(ts[i]) + ")"; };

    std::vector<InequalityVerdict> chains;
    for (int i = 0; i < grid_k; ++i) {
        chains.push_back(make_verdict("jensen-phi", {{"0", 0.0}, {lab(i), phi[i]}}, tol.rel, 0.0, fp));
        if (i + 1 >= grid_k) continue;
        if (ts[i + 1] <= delta)
            chains.push_back(make_verdict("jensen-phi", {{lab(i + 1), phi[i + 1]}, {lab(i), phi[i]}}, tol.rel, 0.0, fp));
        else if (ts[i] >= delta)
            chains.push_back(make_verdict("jensen-phi", {{lab(i), phi[i]}, {lab(i + 1), phi[i + 1]}}, tol.rel, 0.0, fp));
    }
    return binding_verdict(std::move(chains));
}

InequalityVerdict check_thm32(const HeinzEvaluator& ev, double mu, double p, const Tolerances& tol)
{
    require_unit(mu, "mu");
    require_open_unit(p, "p");
    const double mu_r = std::min(mu, 1.0 - mu);
    const double base = 0.5 * (1.0 - p);
    const double f_base = ev.f(base);
    const double gap = (f_base - ev.f(base + p * mu_r)) / p;
    const double outer = ev.f(0.0) - ev.f(mu);
    InequalityVerdict v = make_verdict(
        "thm32", {{"0", 0.0}, {"(f((1-p)/2)-f((1-p)/2+p mu'))/p", gap}, {"f(0)-f(" + num(mu) + ")", outer}}, tol.rel,
        0.0, Fingerprint().add(ev.fingerprint()).add(mu).add(p).value());

    if (mu > 0.5) {
        const double unreduced = (f_base - ev.f(base + p * mu)) / p;
        const double allowance = tol.rel * v.scale();
        if (unreduced < -allowance || outer - unreduced < -allowance)
            v.notes.push_back("unreduced-form violation: gap " + num(unreduced) + " vs outer " + num(outer));
    }
    return v;
}

InequalityVerdict check_thm33(const HeinzEvaluator& ev, double mu, double p, const Tolerances& tol)
{
    require_unit(mu, "mu");
    require_open_unit(p, "p");
    const double mu_r = std::min(mu, 1.0 - mu);
    const double fhalf = ev.f(0.5);
    const double gap = (ev.f(0.5 * (1.0 - p) + p * mu_r) - fhalf) / p;
    return make_verdict("thm33",
                        {{"0", 0.0}, {"(f((1-p)/2+p mu')-f(1/2))/p", gap}, {"f(" + num(mu) + ")-f(1/2)", ev.f(mu) - fhalf}},
                        tol.rel, 0.0, Fingerprint().add(ev.fingerprint()).add(mu).add(p).value());
}

} // namespace csineq
