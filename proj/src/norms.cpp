#include "csineq/norms.hpp"

#include "csineq/errors.hpp"
#include "csineq/random.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>

namespace csineq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kInitialAngles = 32;
constexpr int kMaxRadiusEvaluations = 20000;

bool parse_number(std::string_view s, double& out)
{
    if (s == "inf" || s == "Inf" || s == "infinity") {
        out = kInf;
        return true;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::string format_double(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

NormSpec NormSpec::schatten(double p)
{
    if (!(p >= 1.0)) throw Error(Errc::InvalidSpec, "Schatten exponent must be >= 1");
    return NormSpec(Kind::Schatten, p, 0);
}

NormSpec NormSpec::kyfan(int k)
{
    if (k < 1) throw Error(Errc::InvalidSpec, "Ky Fan index must be >= 1");
    return NormSpec(Kind::KyFan, 0.0, k);
}

NormSpec NormSpec::spectral() { return schatten(kInf); }

NormSpec NormSpec::parse(std::string_view text)
{
    if (text == "trace") return trace();
    if (text == "frobenius") return frobenius();
    if (text == "spectral") return spectral();
    const auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        const auto head = text.substr(0, colon);
        const auto tail = text.substr(colon + 1);
        if (head == "schatten") {
            double p = 0.0;
            if (parse_number(tail, p)) return schatten(p);
        } else if (head == "kyfan") {
            int k = 0;
            auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
            if (ec == std::errc() && ptr == tail.data() + tail.size()) return kyfan(k);
        }
    }
    throw Error(Errc::InvalidSpec, "unrecognised norm '" + std::string(text) + "'");
}

std::string NormSpec::str() const
{
    if (kind_ == Kind::KyFan) return "kyfan:" + std::to_string(k_);
    if (p_ == 1.0) return "trace";
    if (p_ == 2.0) return "frobenius";
    if (p_ == kInf) return "spectral";
    return "schatten:" + format_double(p_);
}

double gauge(std::span<const double> sv, const NormSpec& spec)
{
    if (spec.kind() == NormSpec::Kind::KyFan) {
        const auto k = static_cast<std::size_t>(spec.k());
        if (k > sv.size())
            throw Error(Errc::InvalidSpec, "kyfan:" + std::to_string(k) + " on a spectrum of length " +
                                               std::to_string(sv.size()));
        std::vector<double> s(sv.begin(), sv.end());
        std::partial_sort(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k), s.end(), std::greater<>());
        double sum = 0.0;
        for (std::size_t i = 0; i < k; ++i) sum += s[i];
        return sum;
    }

    double m = 0.0;
    for (double v : sv) m = std::max(m, std::abs(v));
    const double p = spec.p();
    if (p == kInf || m == 0.0) return m;
    if (p == 1.0) {
        double sum = 0.0;
        for (double v : sv) sum += std::abs(v);
        return sum;
    }
    double sum = 0.0;
    for (double v : sv) sum += std::pow(std::abs(v) / m, p);
    return m * std::pow(sum, 1.0 / p);
}

double gauge_abs_pow(const SingularSpectrum& sv, double r, const NormSpec& spec)
{
    if (!(r >= 0.0) || !std::isfinite(r)) throw Error(Errc::InvalidParams, "exponent r must be finite and >= 0");
    std::vector<double> s(sv.values.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double v = sv.values[i];
        s[i] = r == 0.0 ? 1.0 : (r == 1.0 ? v : std::pow(v, r));
    }
    return gauge(s, spec);
}

double uinorm_abs_pow(const MatrixC& m, double r, const NormSpec& spec)
{
    return gauge_abs_pow(singular_values(m), r, spec);
}

double default_radius_tol(const MatrixC& a) { return 1e-8 * std::max(1.0, spectral_norm(a)); }

namespace {

struct Support {
    double theta;
    double h;
    cplx z;
};

class RadiusSolver {
public:
    explicit RadiusSolver(const MatrixC& a) : a_(a), ah_(adjoint(a)) {}

    Support at(double theta)
    {
        ++evaluations_;
        const std::size_t n = a_.n();
        const cplx e = std::polar(1.0, theta);
        MatrixC h(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (e * a_(i, j) + std::conj(e) * ah_(i, j));
        const HermEig eig = herm_eig(h, 1e-8);
        cplx z = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cplx row = 0.0;
            for (std::size_t j = 0; j < n; ++j) row += a_(i, j) * eig.vectors(j, 0);
            z += std::conj(eig.vectors(i, 0)) * row;
        }
        return {theta, eig.values[0], z};
    }

    int evaluations() const noexcept { return evaluations_; }

private:
    const MatrixC& a_;
    MatrixC ah_;
    int evaluations_ = 0;
};

// Largest modulus over the triangle (z_a, z_b, intersection of the two
// supporting lines); the boundary arc between z_a and z_b lies inside it.
double arc_bound(const Support& a, const Support& b)
{
    const double det = std::sin(a.theta - b.theta);
    const double x = (-a.h * std::sin(b.theta) + b.h * std::sin(a.theta)) / det;
    const double y = (std::cos(a.theta) * b.h - a.h * std::cos(b.theta)) / det;
    return std::max({std::abs(a.z), std::abs(b.z), std::hypot(x, y)});
}

struct Arc {
    Support lo;
    Support hi;
    double bound;

    bool operator<(const Arc& o) const noexcept { return bound < o.bound; }
};

} // namespace

RadiusEstimate numerical_radius(const MatrixC& a, double tol)
{
    if (!(tol > 0.0)) throw Error(Errc::InvalidParams, "numerical_radius: tol must be positive");
    a.require_finite("numerical_radius");
    if (max_abs(a) == 0.0) return {0.0, 0.0, 0, 0.0};

    RadiusSolver solver(a);
    double best = -1.0;
    double best_theta = 0.0;
    auto record = [&](const Support& s) {
        const double m = std::abs(s.z);
        if (m > best) {
            best = m;
            best_theta = std::arg(s.z);
        }
    };

    std::vector<Support> ring;
    ring.reserve(kInitialAngles + 1);
    for (int k = 0; k < kInitialAngles; ++k) {
        ring.push_back(solver.at(2.0 * std::numbers::pi * k / kInitialAngles));
        record(ring.back());
    }
    Support wrap = ring.front();
    wrap.theta = 2.0 * std::numbers::pi;
    ring.push_back(wrap);

    std::priority_queue<Arc> arcs;
    for (int k = 0; k < kInitialAngles; ++k) arcs.push({ring[k], ring[k + 1], arc_bound(ring[k], ring[k + 1])});

    double dropped = -1.0;
    while (!arcs.empty() && arcs.top().bound - best > tol) {
        const Arc top = arcs.top();
        arcs.pop();
        if (solver.evaluations() >= kMaxRadiusEvaluations || top.hi.theta - top.lo.theta < 1e-12) {
            dropped = std::max(dropped, top.bound);
            continue;
        }
        const Support mid = solver.at(0.5 * (top.lo.theta + top.hi.theta));
        record(mid);
        arcs.push({top.lo, mid, arc_bound(top.lo, mid)});
        arcs.push({mid, top.hi, arc_bound(mid, top.hi)});
    }
    const double upper = std::max(dropped, arcs.empty() ? best : arcs.top().bound);
    const double gap = std::max(upper - best, 0.0);

    double theta_star = std::fmod(-best_theta, 2.0 * std::numbers::pi);
    if (theta_star < 0.0) theta_star += 2.0 * std::numbers::pi;
    return {best, theta_star, solver.evaluations(), std::max(gap, 0.0)};
}

RadiusEstimate numerical_radius(const MatrixC& a) { return numerical_radius(a, default_radius_tol(a)); }

double numerical_radius_lower_bound(const MatrixC& a, int trials, std::uint64_t seed)
{
    if (trials < 1) throw Error(Errc::InvalidParams, "numerical_radius_lower_bound: trials must be >= 1");
    Rng rng(seed);
    const std::size_t n = a.n();
    double best = 0.0;
    for (int t = 0; t < trials; ++t) {
        const std::vector<cplx> x = random_unit_vector(n, rng);
        cplx q = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cplx row = 0.0;
            for (std::size_t j = 0; j < n; ++j) row += a(i, j) * x[j];
            q += std::conj(x[i]) * row;
        }
        best = std::max(best, std::abs(q));
    }
    return best;
}

double schur_norm_omega_psd(const MatrixC& a)
{
    try {
        PsdSpectrum check(a);
        (void)check;
    } catch (const Error& e) {
        if (e.code() == Errc::NotHermitian) throw Error(Errc::NotPSD, "schur_norm_omega_psd: input is not Hermitian");
        throw;
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.n(); ++i) m = std::max(m, a(i, i).real());
    return m;
}

double schur_norm_omega_search(const MatrixC& a, int trials, std::uint64_t seed)
{
    if (trials < 1) throw Error(Errc::InvalidParams, "schur_norm_omega_search: trials must be >= 1");
    // omega(A o e_i e_i^T) = |a_ii| and omega(e_i e_i^T) = 1.
    double best = 0.0;
    for (std::size_t i = 0; i < a.n(); ++i) best = std::max(best, std::abs(a(i, i)));

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const MatrixC x = ginibre(a.n(), rng);
        const double wx = numerical_radius(x).value;
        if (wx == 0.0) continue;
        best = std::max(best, numerical_radius(hadamard(a, x)).value / wx);
    }
    return best;
}

} // namespace csineq
