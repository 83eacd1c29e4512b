#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace csineq {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
///
/// Every constructor that accepts external data rejects NaN/Inf entries, so a
/// MatrixC that exists is finite unless arithmetic on it overflowed. Kernel
/// entry points re-check with require_finite() for that case.
class MatrixC {
public:
    /// n x n zero matrix; n must be >= 1.
    explicit MatrixC(std::size_t n);
    MatrixC(std::size_t n, std::vector<cplx> entries);

    static MatrixC zeros(std::size_t n) { return MatrixC(n); }
    static MatrixC identity(std::size_t n);
    static MatrixC ones(std::size_t n);
    static MatrixC diag(std::span<const double> d);
    static MatrixC diag(std::span<const cplx> d);
    static MatrixC diag(std::initializer_list<double> d);
    static MatrixC from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    std::size_t n() const noexcept { return n_; }

    cplx operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
    cplx& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }

    std::span<const cplx> entries() const noexcept { return a_; }
    std::span<cplx> entries() noexcept { return a_; }

    bool is_finite() const noexcept;
    void require_finite(const char* where) const;

    MatrixC& operator+=(const MatrixC& o);
    MatrixC& operator-=(const MatrixC& o);
    MatrixC& operator*=(cplx c);

    friend bool operator==(const MatrixC&, const MatrixC&) = default;

private:
    std::size_t n_;
    std::vector<cplx> a_;
};

MatrixC operator+(MatrixC a, const MatrixC& b);
MatrixC operator-(MatrixC a, const MatrixC& b);
MatrixC operator*(const MatrixC& a, const MatrixC& b);
MatrixC operator*(cplx c, MatrixC a);
MatrixC operator*(MatrixC a, cplx c);

MatrixC mul(const MatrixC& a, const MatrixC& b);
MatrixC adjoint(const MatrixC& a);
/// Entrywise (Schur) product.
MatrixC hadamard(const MatrixC& a, const MatrixC& b);

cplx trace(const MatrixC& a);
double frobenius_norm(const MatrixC& a);
double max_abs(const MatrixC& a);
/// ||A - A*||_F
double hermitian_defect(const MatrixC& a);
/// (A + A*) / 2
MatrixC hermitian_part(const MatrixC& a);

} // namespace csineq
