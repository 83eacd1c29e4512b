#pragma once

#include "csineq/matrix.hpp"
#include "csineq/scalar_fn.hpp"

#include <vector>

namespace csineq {

/// Relative threshold below which a negative eigenvalue of a PSD input is
/// treated as roundoff and clamped to zero.
inline constexpr double kPsdClamp = 1e-10;
/// Relative threshold an eigenvalue must exceed for negative powers.
inline constexpr double kPdFloor = 1e-10;
/// Default relative Hermitian-symmetry tolerance.
inline constexpr double kSymmetryTol = 1e-10;

/// Eigen-decomposition A = V diag(values) V* of a Hermitian matrix.
/// values are descending; the columns of vectors are orthonormal.
struct HermEig {
    std::vector<double> values;
    MatrixC vectors;
};

/// Singular values, descending and nonnegative.
struct SingularSpectrum {
    std::vector<double> values;

    double max() const noexcept { return values.empty() ? 0.0 : values.front(); }
};

/// Cyclic complex Jacobi. Throws NotHermitian when
/// ||A - A*||_F > symmetry_tol * ||A||_F, NoConvergence past the sweep budget.
HermEig herm_eig(const MatrixC& a, double symmetry_tol = kSymmetryTol);

/// One-sided (Hestenes) Jacobi on the columns of M.
SingularSpectrum singular_values(const MatrixC& m);

double spectral_norm(const MatrixC& m);

/// V diag(w) V* for a matrix V with orthonormal columns.
MatrixC reconstruct(const MatrixC& vectors, const std::vector<double>& weights);

/// Spectral data of a numerically positive semidefinite matrix, validated
/// once so that many powers can be formed cheaply.
///
/// Eigenvalues in [-kPsdClamp * ||A||, 0) are clamped to 0. Powers use the
/// convention 0^0 = 1, so power(0) is the identity even for singular A.
class PsdSpectrum {
public:
    explicit PsdSpectrum(const MatrixC& a);

    const MatrixC& matrix() const noexcept { return a_; }
    const std::vector<double>& eigenvalues() const noexcept { return lambda_; }
    const MatrixC& eigenvectors() const noexcept { return v_; }
    double scale() const noexcept { return scale_; }
    bool positive_definite() const noexcept;

    /// A^t. Exact input for t == 1, exact identity for t == 0.
    MatrixC power(double t) const;
    MatrixC apply(const ScalarFn& f) const;

private:
    MatrixC a_;
    MatrixC v_;
    std::vector<double> lambda_;
    double scale_;
};

MatrixC psd_power(const MatrixC& a, double t);

/// V diag(f(lambda)) V* for Hermitian A. Eigenvalues within roundoff below a
/// closed lower domain bound are clamped onto it.
MatrixC matrix_fn(const MatrixC& a, const ScalarFn& f);

} // namespace csineq
