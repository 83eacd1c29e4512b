#pragma once

#include "csineq/linalg.hpp"
#include "csineq/matrix.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace csineq {

/// Selector for a unitarily invariant norm, evaluated as a symmetric gauge
/// function of the singular values.
class NormSpec {
public:
    enum class Kind { Schatten, KyFan };

    /// p >= 1, or +inf for the spectral norm.
    static NormSpec schatten(double p);
    static NormSpec kyfan(int k);
    static NormSpec trace() { return schatten(1.0); }
    static NormSpec frobenius() { return schatten(2.0); }
    static NormSpec spectral();

    /// Canonical forms: "trace", "frobenius", "spectral", "schatten:p",
    /// "kyfan:k"; "schatten:inf" is accepted as an alias of "spectral".
    static NormSpec parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    double p() const noexcept { return p_; }
    int k() const noexcept { return k_; }

    std::string str() const;

    friend bool operator==(const NormSpec&, const NormSpec&) = default;

private:
    NormSpec(Kind kind, double p, int k) : kind_(kind), p_(p), k_(k) {}

    Kind kind_;
    double p_;
    int k_;
};

/// Symmetric gauge of a nonnegative vector (any order).
double gauge(std::span<const double> sv, const NormSpec& spec);
inline double gauge(const SingularSpectrum& sv, const NormSpec& spec) { return gauge(sv.values, spec); }

/// gauge of (sigma_i^r), i.e. ||| |M|^r ||| from the singular values of M.
/// r = 0 maps every singular value (zero included) to 1, so |M|^0 = I.
double gauge_abs_pow(const SingularSpectrum& sv, double r, const NormSpec& spec);

/// ||| |M|^r |||
double uinorm_abs_pow(const MatrixC& m, double r, const NormSpec& spec);

struct RadiusEstimate {
    double value;
    /// Angle at which Re(e^{i theta} A) attains value, in [0, 2 pi).
    double theta_star;
    /// Number of Hermitian eigenproblems solved.
    int grid_points;
    /// Certified gap between value and the upper bound at termination.
    double refinement_tol;
};

/// Default absolute tolerance 1e-8 * max(1, ||A||_2).
double default_radius_tol(const MatrixC& a);

/// omega(A) = max_theta lambda_max(Re(e^{i theta} A)), to absolute error tol.
///
/// Each evaluated angle yields a boundary point of the numerical range and a
/// supporting line. Consecutive lines bound the arc between them inside a
/// triangle, so the largest triangle vertex modulus is a certified upper
/// bound. Angles are bisected until upper and lower bounds agree within tol.
RadiusEstimate numerical_radius(const MatrixC& a, double tol);
RadiusEstimate numerical_radius(const MatrixC& a);

/// max |x* A x| over random unit vectors; never exceeds omega(A).
double numerical_radius_lower_bound(const MatrixC& a, int trials, std::uint64_t seed);

/// ||S_A||_omega for PSD A, i.e. max_i a_ii.
double schur_norm_omega_psd(const MatrixC& a);

/// Lower bound on sup_X omega(A o X) / omega(X) from the candidates
/// X = e_i e_i^T and `trials` random Ginibre X.
double schur_norm_omega_search(const MatrixC& a, int trials, std::uint64_t seed);

} // namespace csineq
