#include "csineq/quadrature.hpp"

#include "csineq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace csineq {

namespace {

constexpr int kMinDepth = 2;
constexpr int kMaxDepth = 48;

struct Panel {
    double a, fa, m, fm, b, fb;
    double whole;
    double tol;
    int depth;
};

double simpson(double a, double fa, double fm, double b, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

} // namespace

QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b, double tol, long max_evals)
{
    if (!(a <= b)) throw Error(Errc::InvalidParams, "integrate_1d: requires a <= b");
    if (!(tol > 0.0)) throw Error(Errc::InvalidParams, "integrate_1d: tol must be positive");
    QuadResult out;
    if (a == b) return out;

    auto eval = [&](double x) {
        if (++out.evaluations > max_evals)
            throw Error(Errc::BudgetExceeded, "integrate_1d: evaluation budget exhausted");
        const double v = f(x);
        if (!std::isfinite(v)) throw Error(Errc::DomainViolation, "integrate_1d: integrand is not finite");
        return v;
    };

    const double fa = eval(a);
    const double fb = eval(b);
    const double m = 0.5 * (a + b);
    const double fm = eval(m);

    std::vector<Panel> stack;
    stack.push_back({a, fa, m, fm, b, fb, simpson(a, fa, fm, b, fb), tol, 0});
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const double lm = 0.5 * (p.a + p.m);
        const double rm = 0.5 * (p.m + p.b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = simpson(p.a, p.fa, flm, p.m, p.fm);
        const double right = simpson(p.m, p.fm, frm, p.b, p.fb);
        const double delta = left + right - p.whole;
        if (p.depth >= kMinDepth && (std::abs(delta) <= 15.0 * p.tol || p.depth >= kMaxDepth)) {
            out.value += left + right + delta / 15.0;
            out.error_estimate += std::abs(delta) / 15.0;
            continue;
        }
        stack.push_back({p.m, p.fm, rm, frm, p.b, p.fb, right, 0.5 * p.tol, p.depth + 1});
        stack.push_back({p.a, p.fa, lm, flm, p.m, p.fm, left, 0.5 * p.tol, p.depth + 1});
    }
    return out;
}

QuadResult integrate_2d(const std::function<double(double, double)>& f, const Box& box, double tol,
                        long max_evals_per_axis)
{
    if (!(box.a <= box.b) || !(box.c <= box.d)) throw Error(Errc::InvalidParams, "integrate_2d: empty box");
    if (!(tol > 0.0)) throw Error(Errc::InvalidParams, "integrate_2d: tol must be positive");
    QuadResult out;
    if (box.a == box.b || box.c == box.d) return out;

    const double inner_tol = tol / (2.0 * (box.b - box.a));
    double inner_error = 0.0;
    long inner_evals = 0;
    const QuadResult outer = integrate_1d(
        [&](double x) {
            const QuadResult in =
                integrate_1d([&](double y) { return f(x, y); }, box.c, box.d, inner_tol, max_evals_per_axis);
            inner_error = std::max(inner_error, in.error_estimate);
            inner_evals += in.evaluations;
            return in.value;
        },
        box.a, box.b, 0.5 * tol, max_evals_per_axis);
    out.value = outer.value;
    out.error_estimate = outer.error_estimate + (box.b - box.a) * inner_error;
    out.evaluations = inner_evals;
    return out;
}

} // namespace csineq
