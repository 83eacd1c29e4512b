#pragma once

#include "csineq/matrix.hpp"
#include "csineq/random.hpp"

#include <cmath>
#include <vector>

namespace testing {

using csineq::cplx;
using csineq::MatrixC;

/// Haar-ish unitary: modified Gram-Schmidt on the columns of a Ginibre matrix.
inline MatrixC random_unitary(std::size_t n, csineq::Rng& rng)
{
    MatrixC q = csineq::ginibre(n, rng);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cplx d = 0.0;
            for (std::size_t i = 0; i < n; ++i) d += std::conj(q(i, k)) * q(i, j);
            for (std::size_t i = 0; i < n; ++i) q(i, j) -= d * q(i, k);
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < n; ++i) nrm += std::norm(q(i, j));
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < n; ++i) q(i, j) /= nrm;
    }
    return q;
}

inline MatrixC random_hermitian(std::size_t n, csineq::Rng& rng)
{
    MatrixC g = csineq::ginibre(n, rng);
    return csineq::hermitian_part(g);
}

inline double max_diff(const MatrixC& a, const MatrixC& b) { return csineq::max_abs(a - b); }

/// A = B = diag(1, 4), X = swap. A^t X B^{1-t} has singular values {4^t, 4^{1-t}}.
struct DiagInstance {
    MatrixC a = MatrixC::diag({1.0, 4.0});
    MatrixC b = MatrixC::diag({1.0, 4.0});
    MatrixC x = MatrixC::from_rows({{0.0, 1.0}, {1.0, 0.0}});

    static double f(double t)
    {
        const double v = std::pow(4.0, t) + std::pow(4.0, 1.0 - t);
        return v * v;
    }
};

} // namespace testing
