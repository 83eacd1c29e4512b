#pragma once

#include <functional>

namespace csineq {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// Per-axis evaluation budget.
inline constexpr long kQuadBudget = 10000;

/// Adaptive Simpson with Richardson extrapolation. |value - integral| <= tol
/// for integrands with a bounded fourth derivative; cubics are integrated
/// exactly. a == b gives 0. Throws BudgetExceeded past max_evals.
QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b, double tol,
                        long max_evals = kQuadBudget);

struct Box {
    double a, b; // x range
    double c, d; // y range
};

/// Iterated integration: outer over x with tol/2, inner over y with
/// tol / (2 (b - a)). Degenerate boxes give 0.
QuadResult integrate_2d(const std::function<double(double, double)>& f, const Box& box, double tol,
                        long max_evals_per_axis = kQuadBudget);

} // namespace csineq
