#include "csineq/linalg.hpp"

#include "csineq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace csineq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 100;

// Unitary 2x2 block J acting on coordinates (p, q) that annihilates the
// off-diagonal entry b*e of the Hermitian block [[app, b e], [b conj(e), aqq]]
// under J* (.) J, with b = |apq| > 0.
struct Rotation {
    cplx pp, pq, qp, qq;
};

Rotation jacobi_rotation(double app, double aqq, cplx apq)
{
    const double b = std::abs(apq);
    const cplx e = apq / b;
    const double theta = (aqq - app) / (2.0 * b);
    double t;
    if (std::abs(theta) > 1e150)
        t = 0.5 / theta;
    else
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    return {cplx(c), cplx(s), -s * std::conj(e), c * std::conj(e)};
}

void rotate_columns(MatrixC& m, std::size_t p, std::size_t q, const Rotation& j)
{
    for (std::size_t k = 0; k < m.n(); ++k) {
        const cplx mkp = m(k, p);
        const cplx mkq = m(k, q);
        m(k, p) = mkp * j.pp + mkq * j.qp;
        m(k, q) = mkp * j.pq + mkq * j.qq;
    }
}

void rotate_rows_adjoint(MatrixC& m, std::size_t p, std::size_t q, const Rotation& j)
{
    for (std::size_t k = 0; k < m.n(); ++k) {
        const cplx mpk = m(p, k);
        const cplx mqk = m(q, k);
        m(p, k) = std::conj(j.pp) * mpk + std::conj(j.qp) * mqk;
        m(q, k) = std::conj(j.pq) * mpk + std::conj(j.qq) * mqk;
    }
}

} // namespace

HermEig herm_eig(const MatrixC& in, double symmetry_tol)
{
    in.require_finite("herm_eig");
    const double fro = frobenius_norm(in);
    if (hermitian_defect(in) > symmetry_tol * fro)
        throw Error(Errc::NotHermitian, "herm_eig: input is not Hermitian within tolerance");

    const std::size_t n = in.n();
    MatrixC a = hermitian_part(in);
    MatrixC v = MatrixC::identity(n);

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double b = std::abs(apq);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                if (b == 0.0 || b <= kEps * std::sqrt(std::abs(app) * std::abs(aqq)) ||
                    b < std::numeric_limits<double>::min())
                    continue;
                converged = false;
                const Rotation j = jacobi_rotation(app, aqq, apq);
                rotate_columns(a, p, q, j);
                rotate_rows_adjoint(a, p, q, j);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                rotate_columns(v, p, q, j);
            }
        }
    }
    if (!converged) throw Error(Errc::NoConvergence, "herm_eig: sweep budget exhausted");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    HermEig out{std::vector<double>(n), MatrixC(n)};
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
    }
    return out;
}

SingularSpectrum singular_values(const MatrixC& m)
{
    m.require_finite("singular_values");
    const std::size_t n = m.n();
    MatrixC u = m;

    auto column_dot = [&](std::size_t p, std::size_t q) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += std::conj(u(k, p)) * u(k, q);
        return s;
    };
    auto column_norm2 = [&](std::size_t p) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += std::norm(u(k, p));
        return s;
    };

    // Columns below eps * largest column carry singular values under roundoff.
    double max_norm2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) max_norm2 = std::max(max_norm2, column_norm2(j));
    const double negligible = kEps * kEps * max_norm2;
    const double orth_tol = static_cast<double>(n) * kEps;

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = column_norm2(p);
                const double beta = column_norm2(q);
                if (alpha <= negligible || beta <= negligible) continue;
                const cplx gamma = column_dot(p, q);
                const double g = std::abs(gamma);
                if (g <= orth_tol * std::sqrt(alpha * beta)) continue;
                converged = false;
                rotate_columns(u, p, q, jacobi_rotation(alpha, beta, gamma));
            }
        }
    }
    if (!converged) throw Error(Errc::NoConvergence, "singular_values: sweep budget exhausted");

    SingularSpectrum out;
    out.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.values[j] = std::sqrt(column_norm2(j));
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
}

double spectral_norm(const MatrixC& m) { return singular_values(m).max(); }

MatrixC reconstruct(const MatrixC& v, const std::vector<double>& w)
{
    const std::size_t n = v.n();
    MatrixC out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += v(i, k) * w[k] * std::conj(v(j, k));
            out(i, j) = s;
            out(j, i) = std::conj(s);
        }
        out(i, i) = out(i, i).real();
    }
    return out;
}

PsdSpectrum::PsdSpectrum(const MatrixC& a) : a_(a), v_(a.n()), scale_(0.0)
{
    HermEig eig = herm_eig(a);
    for (double l : eig.values) scale_ = std::max(scale_, std::abs(l));
    if (!eig.values.empty() && eig.values.back() < -kPsdClamp * scale_)
        throw Error(Errc::NotPSD, "matrix has a negative eigenvalue beyond roundoff");
    for (double& l : eig.values) l = std::max(l, 0.0);
    lambda_ = std::move(eig.values);
    v_ = std::move(eig.vectors);
}

bool PsdSpectrum::positive_definite() const noexcept
{
    return scale_ > 0.0 && lambda_.back() > kPdFloor * scale_;
}

MatrixC PsdSpectrum::power(double t) const
{
    if (!std::isfinite(t)) throw Error(Errc::InvalidParams, "power: exponent must be finite");
    if (t == 1.0) return a_;
    if (t == 0.0) return MatrixC::identity(a_.n());
    if (t < 0.0 && !positive_definite())
        throw Error(Errc::SingularForNegativePower, "negative power of a singular PSD matrix");
    std::vector<double> w(lambda_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = lambda_[i] == 0.0 ? 0.0 : std::pow(lambda_[i], t);
    return reconstruct(v_, w);
}

MatrixC PsdSpectrum::apply(const ScalarFn& f) const
{
    std::vector<double> w(lambda_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = f(lambda_[i]);
    return reconstruct(v_, w);
}

MatrixC psd_power(const MatrixC& a, double t) { return PsdSpectrum(a).power(t); }

MatrixC matrix_fn(const MatrixC& a, const ScalarFn& f)
{
    HermEig eig = herm_eig(a);
    double scale = 0.0;
    for (double l : eig.values) scale = std::max(scale, std::abs(l));
    const Interval& dom = f.domain();
    std::vector<double> w(eig.values.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        double l = eig.values[i];
        if (dom.lo_closed && l < dom.lo && l >= dom.lo - kPsdClamp * scale) l = dom.lo;
        w[i] = f(l);
    }
    return reconstruct(eig.vectors, w);
}

} // namespace csineq
