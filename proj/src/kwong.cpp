#include "csineq/errors.hpp"
#include "csineq/inequalities.hpp"

#include <algorithm>
#include <cmath>

namespace csineq {

namespace {

// Distinct eigenvalues, merging those closer than 1e-12 of the largest.
std::vector<double> distinct_points(const std::vector<double>& eigenvalues)
{
    std::vector<double> pts(eigenvalues);
    std::sort(pts.begin(), pts.end());
    const double scale = pts.empty() ? 0.0 : std::abs(pts.back());
    std::vector<double> out;
    for (double p : pts)
        if (out.empty() || p - out.back() > 1e-12 * scale) out.push_back(p);
    return out;
}

MatrixC apply_fn(const PsdSpectrum& spec, const ScalarFn& f)
{
    // Powers go through PsdSpectrum::power so that t^0 and t^1 are exact.
    if (f.kind() == ScalarFn::Kind::Power) return spec.power(f.alpha());
    return spec.apply(f);
}

} // namespace

MatrixC kwong_matrix(std::span<const double> points, const ScalarFn& f)
{
    const std::size_t n = points.size();
    if (n == 0) throw Error(Errc::InvalidParams, "kwong_matrix: no points");
    std::vector<double> fv(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(points[i] > 0.0)) throw Error(Errc::DomainViolation, "kwong_matrix: points must be positive");
        for (std::size_t j = 0; j < i; ++j)
            if (points[i] == points[j]) throw Error(Errc::InvalidParams, "kwong_matrix: points must be distinct");
        fv[i] = f(points[i]);
    }
    MatrixC k(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k(i, j) = (fv[i] + fv[j]) / (points[i] + points[j]);
    return k;
}

double kwong_min_eigenvalue(std::span<const double> points, const ScalarFn& f)
{
    const MatrixC k = kwong_matrix(points, f);
    const double scale = max_abs(k);
    if (scale == 0.0) return 0.0;
    return herm_eig(k).values.back() / scale;
}

bool is_kwong_sample(std::span<const double> points, const ScalarFn& f, double tol)
{
    return kwong_min_eigenvalue(points, f) >= -tol;
}

InequalityVerdict check_kwong_sample(std::span<const double> points, const ScalarFn& f, const Tolerances& tol)
{
    Fingerprint fp;
    fp.add(f.name());
    for (double p : points) fp.add(p);
    return make_verdict("kwong-psd", {{"0", 0.0}, {"lambda_min/max|K|", kwong_min_eigenvalue(points, f)}}, tol.rel,
                        0.0, fp.value());
}

InequalityVerdict check_thm43(const MatrixC& a, const MatrixC& x, const ScalarFn& f, const ScalarFn& g,
                              const Tolerances& tol)
{
    if (a.n() != x.n()) throw Error(Errc::DimensionMismatch, "check_thm43: A and X sizes differ");
    const PsdSpectrum spec(a);
    if (!spec.positive_definite()) throw Error(Errc::NotPSD, "check_thm43: A must be positive definite");

    const std::vector<double> pts = distinct_points(spec.eigenvalues());
    const ScalarFn ratio = ScalarFn::quotient(f, g);
    if (!is_kwong_sample(pts, ratio))
        throw Error(Errc::KwongPreconditionFailed, ratio.name() + " fails the Kwong test on the spectrum of A");
    for (double l : spec.eigenvalues())
        if (f(l) * g(l) > l * (1.0 + 1e-12))
            throw Error(Errc::KwongPreconditionFailed, "f(t) g(t) <= t fails on the spectrum of A");

    const MatrixC fa = apply_fn(spec, f);
    const MatrixC ga = apply_fn(spec, g);
    const MatrixC lhs = fa * x * ga + ga * x * fa;
    const MatrixC rhs = a * x + x * a;
    const double tol_l = tol.omega * std::max(1.0, spectral_norm(lhs));
    const double tol_r = tol.omega * std::max(1.0, spectral_norm(rhs));

    const auto fp = Fingerprint().add(a).add(x).add(f.name()).add(g.name()).value();
    return make_verdict("thm43",
                        {{"w(f(A)Xg(A)+g(A)Xf(A))", numerical_radius(lhs, tol_l).value},
                         {"w(AX+XA)", numerical_radius(rhs, tol_r).value}},
                        tol.rel, tol_l + tol_r, fp);
}

InequalityVerdict check_cor44(const MatrixC& a, const MatrixC& x, double alpha, const Tolerances& tol)
{
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(Errc::InvalidParams, "alpha must lie in [0, 1]");
    InequalityVerdict v = check_thm43(a, x, ScalarFn::power(alpha), ScalarFn::power(1.0 - alpha), tol);
    v.suite_id = "cor44";
    return v;
}

InequalityVerdict check_example45(const MatrixC& a, const MatrixC& x, const Tolerances& tol)
{
    InequalityVerdict v = check_thm43(a, x, ScalarFn::log1p(), ScalarFn::t_over_log1p(), tol);
    v.suite_id = "example45";
    return v;
}

} // namespace csineq
