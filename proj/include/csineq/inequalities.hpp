#pragma once

#include "csineq/linalg.hpp"
#include "csineq/matrix.hpp"
#include "csineq/norms.hpp"
#include "csineq/scalar_fn.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace csineq {

struct Link {
    std::string label;
    double value;
};

/// One evaluated inequality chain links[0] <= links[1] <= ... .
///
/// pass holds iff every slack (links[i+1] - links[i]) is at least
/// -(tol_used * scale() + abs_tol), with scale() = max(1, max |link|).
/// abs_tol carries error budgets that are absolute by nature (quadrature,
/// numerical radius); it is zero for purely algebraic chains.
struct InequalityVerdict {
    std::string suite_id;
    std::vector<Link> links;
    std::vector<double> slacks;
    double tol_used = 0.0;
    double abs_tol = 0.0;
    bool pass = true;
    std::uint64_t instance_fingerprint = 0;
    std::vector<std::string> notes;

    double scale() const noexcept;
    double min_slack() const noexcept;
    /// min_slack() / scale()
    double scaled_min_slack() const noexcept;
    /// (min_slack + allowance) / scale; negative iff the verdict fails.
    double margin() const noexcept;
};

InequalityVerdict make_verdict(std::string suite_id, std::vector<Link> links, double tol_rel, double abs_tol,
                               std::uint64_t fingerprint);

/// The sub-chain closest to failing (smallest margin). Composite checks
/// (convexity, monotonicity) report it as their verdict; pass is the
/// conjunction over all sub-chains.
InequalityVerdict binding_verdict(std::vector<InequalityVerdict> chains);

struct Tolerances {
    double rel = 1e-8;
    /// Absolute error allowed on each normalized integral mean.
    double quad = 1e-9;
    /// Relative numerical-radius tolerance: omega is computed to
    /// omega * max(1, ||M||_2).
    double omega = 1e-8;
};

/// Incremental FNV-1a hash of instance data and parameters.
class Fingerprint {
public:
    Fingerprint& add(const MatrixC& m);
    Fingerprint& add(double v);
    Fingerprint& add(std::string_view s);
    std::uint64_t value() const noexcept { return h_; }

private:
    std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

/// Evaluates ||| |A^a X B^b|^r ||| and the products built from it for fixed
/// PSD A, B, general X, exponent r and norm.
///
/// The spectral decompositions of A and B are computed once. Powers and the
/// left factors A^a X are memoised, so an evaluator is not safe to share
/// between threads; build one per thread.
class HeinzEvaluator {
public:
    HeinzEvaluator(const MatrixC& a, const MatrixC& b, const MatrixC& x, double r, NormSpec spec);

    const MatrixC& a() const noexcept { return a_.matrix(); }
    const MatrixC& b() const noexcept { return b_.matrix(); }
    const MatrixC& x() const noexcept { return x_; }
    double r() const noexcept { return r_; }
    const NormSpec& spec() const noexcept { return spec_; }
    std::size_t n() const noexcept { return x_.n(); }

    /// ||| |A^a_exp X B^b_exp|^r |||
    double norm_of(double a_exp, double b_exp) const;
    /// norm_of(a, b) * norm_of(1 - a, 1 - b)
    double pair(double a_exp, double b_exp) const;

    /// Heinz-type product ||| |A^t X B^{1-t}|^r ||| ||| |A^{1-t} X B^t|^r |||.
    double f(double t) const { return pair(t, 1.0 - t); }
    /// ||| |A^t X B^{1-s}|^r ||| ||| |A^{1-t} X B^s|^r |||
    double surface(double s, double t) const { return pair(t, 1.0 - s); }
    /// ||| |A^s X B^{1-t}|^r ||| ||| |A^{1-s} X B^t|^r |||, the integrand of
    /// the two-parameter Hermite-Hadamard chain.
    double kernel(double s, double t) const { return pair(s, 1.0 - t); }

    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

private:
    const MatrixC& left(double a_exp) const;
    const MatrixC& right(double b_exp) const;

    PsdSpectrum a_;
    PsdSpectrum b_;
    MatrixC x_;
    double r_;
    NormSpec spec_;
    std::uint64_t fingerprint_;
    mutable std::unordered_map<double, MatrixC> left_cache_;
    mutable std::unordered_map<double, MatrixC> right_cache_;
};

double heinz_f(const MatrixC& a, const MatrixC& b, const MatrixC& x, double r, const NormSpec& spec, double t);

/// f(t) sampled on t_i = i / (k - 1).
struct HeinzCurve {
    double r;
    NormSpec spec;
    std::vector<std::pair<double, double>> samples;
};

HeinzCurve heinz_curve(const HeinzEvaluator& ev, int k);

/// G(s_i, t_j) on a uniform grid_n x grid_n grid of [0,1]^2; grid_n odd >= 3.
struct TwoParamSurface {
    int grid_n;
    std::vector<double> nodes;
    /// values[i * grid_n + j] = G(nodes[i], nodes[j])
    std::vector<double> values;

    double at(int i, int j) const { return values[static_cast<std::size_t>(i * grid_n + j)]; }
};

TwoParamSurface surface_G(const HeinzEvaluator& ev, int grid_n);

// Cauchy-Schwarz refinement chain f(1/2) <= f(mu) <= f(0).
InequalityVerdict check_cs_basic(const HeinzEvaluator& ev, double mu, const Tolerances& tol = {});

/// ||| |A* X B|^r |||^2 <= ||| |A A* X|^r ||| ||| |X B B*|^r ||| for arbitrary A, B, X.
InequalityVerdict check_bhatia_davis(const MatrixC& a, const MatrixC& b, const MatrixC& x, double r,
                                     const NormSpec& spec, const Tolerances& tol = {});

/// Four-term Hermite-Hadamard chain for f between mu and 1 - mu. When
/// |1 - 2 mu| < 1e-6 the integral mean is replaced by its limit f(1/2).
InequalityVerdict check_hh_chain(const HeinzEvaluator& ev, double mu, const Tolerances& tol = {});

/// g(mid) <= mean <= (g(a) + 2 g(mid) + g(b)) / 4 <= (g(a) + g(b)) / 2 for convex g.
InequalityVerdict check_hermite_hadamard(const std::function<double(double)>& g, double a, double b,
                                         const Tolerances& tol = {});

InequalityVerdict check_corner_max(const HeinzEvaluator& ev, double s, double t, const Tolerances& tol = {});

/// Two-parameter chain over [alpha, 1-alpha] x [beta, 1-beta] (either
/// orientation). alpha and beta must lie on the same side of 1/2.
InequalityVerdict check_dragomir_2d(const HeinzEvaluator& ev, double alpha, double beta,
                                    const Tolerances& tol = {});

/// Midpoint convexity of f over all grid pairs and argmin at t = 1/2.
InequalityVerdict check_convexity_f(const HeinzEvaluator& ev, int grid_k, const Tolerances& tol = {});

/// Midpoint convexity of G at every interior node (axis and diagonal
/// directions) and argmin at (1/2, 1/2).
InequalityVerdict check_convexity_G(const HeinzEvaluator& ev, int grid_n, const Tolerances& tol = {});

/// phi(t) = (1-p) f(delta) + p f(t) - f((1-p) delta + p t)
double jensen_phi(const std::function<double(double)>& f, double delta, double p, double t);
double jensen_phi(const HeinzEvaluator& ev, double delta, double p, double t);

/// phi nonincreasing on [0, delta], nondecreasing on [delta, 1], and >= 0,
/// sampled on a grid_k point grid.
InequalityVerdict check_jensen_phi(const HeinzEvaluator& ev, double delta, double p, int grid_k,
                                   const Tolerances& tol = {});

/// links = [0, (1/p)(f((1-p)/2) - f((1-p)/2 + p mu')), f(0) - f(mu)], mu' = min(mu, 1-mu).
/// Adds a note when the unreduced form (mu in place of mu') would fail.
InequalityVerdict check_thm32(const HeinzEvaluator& ev, double mu, double p, const Tolerances& tol = {});

/// links = [0, (1/p)(f((1-p)/2 + p mu') - f(1/2)), f(mu) - f(1/2)].
InequalityVerdict check_thm33(const HeinzEvaluator& ev, double mu, double p, const Tolerances& tol = {});

/// ((f(a_i) + f(a_j)) / (a_i + a_j))_{ij} for distinct positive points.
MatrixC kwong_matrix(std::span<const double> points, const ScalarFn& f);

/// Smallest eigenvalue of the Kwong matrix divided by its largest entry
/// modulus (0 for the zero matrix).
double kwong_min_eigenvalue(std::span<const double> points, const ScalarFn& f);

bool is_kwong_sample(std::span<const double> points, const ScalarFn& f, double tol = 1e-10);

/// Chain [0, kwong_min_eigenvalue] as a verdict.
InequalityVerdict check_kwong_sample(std::span<const double> points, const ScalarFn& f, const Tolerances& tol = {});

/// omega(f(A) X g(A) + g(A) X f(A)) <= omega(A X + X A) for positive definite A.
/// Throws KwongPreconditionFailed if f/g fails the Kwong test on the spectrum
/// of A or f(t) g(t) > t at an eigenvalue.
InequalityVerdict check_thm43(const MatrixC& a, const MatrixC& x, const ScalarFn& f, const ScalarFn& g,
                              const Tolerances& tol = {});
InequalityVerdict check_cor44(const MatrixC& a, const MatrixC& x, double alpha, const Tolerances& tol = {});
InequalityVerdict check_example45(const MatrixC& a, const MatrixC& x, const Tolerances& tol = {});

} // namespace csineq
