#include "csineq/matrix.hpp"

#include "csineq/errors.hpp"

#include <cmath>
#include <string>

namespace csineq {

const char* to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::NonFinite: return "NonFinite";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::NotPSD: return "NotPSD";
    case Errc::SingularForNegativePower: return "SingularForNegativePower";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::KwongPreconditionFailed: return "KwongPreconditionFailed";
    case Errc::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

namespace {

void require_same_size(const MatrixC& a, const MatrixC& b, const char* op)
{
    if (a.n() != b.n())
        throw Error(Errc::DimensionMismatch, std::string(op) + ": " + std::to_string(a.n()) + " vs " +
                                                 std::to_string(b.n()));
}

} // namespace

MatrixC::MatrixC(std::size_t n) : n_(n), a_(n * n)
{
    if (n == 0) throw Error(Errc::DimensionMismatch, "matrix dimension must be positive");
}

MatrixC::MatrixC(std::size_t n, std::vector<cplx> entries) : n_(n), a_(std::move(entries))
{
    if (n == 0) throw Error(Errc::DimensionMismatch, "matrix dimension must be positive");
    if (a_.size() != n * n)
        throw Error(Errc::DimensionMismatch,
                    "expected " + std::to_string(n * n) + " entries, got " + std::to_string(a_.size()));
    require_finite("MatrixC");
}

MatrixC MatrixC::identity(std::size_t n)
{
    MatrixC m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

MatrixC MatrixC::ones(std::size_t n)
{
    return MatrixC(n, std::vector<cplx>(n * n, cplx(1.0)));
}

MatrixC MatrixC::diag(std::span<const double> d)
{
    MatrixC m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    m.require_finite("MatrixC::diag");
    return m;
}

MatrixC MatrixC::diag(std::span<const cplx> d)
{
    MatrixC m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    m.require_finite("MatrixC::diag");
    return m;
}

MatrixC MatrixC::diag(std::initializer_list<double> d)
{
    return diag(std::span<const double>(d.begin(), d.size()));
}

MatrixC MatrixC::from_rows(std::initializer_list<std::initializer_list<cplx>> rows)
{
    const std::size_t n = rows.size();
    std::vector<cplx> e;
    e.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw Error(Errc::DimensionMismatch, "from_rows: matrix must be square");
        e.insert(e.end(), row.begin(), row.end());
    }
    return MatrixC(n, std::move(e));
}

bool MatrixC::is_finite() const noexcept
{
    for (const auto& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

void MatrixC::require_finite(const char* where) const
{
    if (!is_finite()) throw Error(Errc::NonFinite, std::string(where) + ": matrix has NaN or Inf entries");
}

MatrixC& MatrixC::operator+=(const MatrixC& o)
{
    require_same_size(*this, o, "add");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

MatrixC& MatrixC::operator-=(const MatrixC& o)
{
    require_same_size(*this, o, "sub");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

MatrixC& MatrixC::operator*=(cplx c)
{
    for (auto& z : a_) z *= c;
    return *this;
}

MatrixC operator+(MatrixC a, const MatrixC& b) { return a += b; }
MatrixC operator-(MatrixC a, const MatrixC& b) { return a -= b; }
MatrixC operator*(cplx c, MatrixC a) { return a *= c; }
MatrixC operator*(MatrixC a, cplx c) { return a *= c; }
MatrixC operator*(const MatrixC& a, const MatrixC& b) { return mul(a, b); }

MatrixC mul(const MatrixC& a, const MatrixC& b)
{
    require_same_size(a, b, "mul");
    const std::size_t n = a.n();
    MatrixC c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

MatrixC adjoint(const MatrixC& a)
{
    const std::size_t n = a.n();
    MatrixC h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(j, i) = std::conj(a(i, j));
    return h;
}

MatrixC hadamard(const MatrixC& a, const MatrixC& b)
{
    require_same_size(a, b, "hadamard");
    MatrixC c = a;
    auto ce = c.entries();
    auto be = b.entries();
    for (std::size_t i = 0; i < ce.size(); ++i) ce[i] *= be[i];
    return c;
}

cplx trace(const MatrixC& a)
{
    cplx t = 0.0;
    for (std::size_t i = 0; i < a.n(); ++i) t += a(i, i);
    return t;
}

double frobenius_norm(const MatrixC& a)
{
    double s = 0.0;
    for (const auto& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs(const MatrixC& a)
{
    double m = 0.0;
    for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

double hermitian_defect(const MatrixC& a)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
    return std::sqrt(s);
}

MatrixC hermitian_part(const MatrixC& a)
{
    const std::size_t n = a.n();
    MatrixC h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

} // namespace csineq
