#include "doctest.h"

#include "csineq/errors.hpp"
#include "csineq/inequalities.hpp"
#include "csineq/quadrature.hpp"

#include <cmath>

using namespace csineq;

TEST_CASE("integrate_1d examples")
{
    CHECK(integrate_1d([](double) { return 1.0; }, 0.0, 1.0, 1e-12).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(integrate_1d([](double s) { return s * s; }, 0.0, 1.0, 1e-12).value ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(integrate_1d([](double s) { return s * s * s - 2.0 * s; }, -1.0, 2.0, 1e-12).value ==
          doctest::Approx(0.75).epsilon(1e-14));

    // Antiderivative of 4^s + 4^{1-s} is (4^s - 4^{1-s}) / ln 4.
    const QuadResult r = integrate_1d([](double s) { return std::pow(4.0, s) + std::pow(4.0, 1.0 - s); }, 0.0, 1.0, 1e-10);
    CHECK(std::abs(r.value - 6.0 / std::log(4.0)) <= 1e-10);
    CHECK(r.value == doctest::Approx(4.328085).epsilon(1e-7));
    CHECK(r.error_estimate >= 0.0);
    CHECK(r.evaluations >= 5);

    const QuadResult empty = integrate_1d([](double) { return 1.0; }, 0.3, 0.3, 1e-9);
    CHECK(empty.value == 0.0);
}

TEST_CASE("integrate_1d budget")
{
    try {
        integrate_1d([](double s) { return std::sin(1.0 / (s + 1e-6)); }, 0.0, 1.0, 1e-14, 200);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BudgetExceeded);
    }
}

TEST_CASE("integrate_2d examples")
{
    const Box unit{0.0, 1.0, 0.0, 1.0};
    CHECK(integrate_2d([](double, double) { return 1.0; }, unit, 1e-12).value == doctest::Approx(1.0));
    CHECK(integrate_2d([](double x, double y) { return x * y; }, unit, 1e-12).value == doctest::Approx(0.25));
    CHECK(integrate_2d([](double x, double y) { return x + y * y; }, unit, 1e-12).value ==
          doctest::Approx(0.5 + 1.0 / 3.0));
    CHECK(integrate_2d([](double x, double y) { return x + y; }, Box{0.0, 0.0, 0.0, 1.0}, 1e-9).value == 0.0);
    CHECK(integrate_2d([](double x, double y) { return x + y; }, Box{0.0, 1.0, 0.5, 0.5}, 1e-9).value == 0.0);
    const double e2d = integrate_2d([](double x, double y) { return std::exp(x + 2.0 * y); }, unit, 1e-10).value;
    CHECK(std::abs(e2d - (std::exp(1.0) - 1.0) * (std::exp(2.0) - 1.0) / 2.0) <= 1e-10);
}

TEST_CASE("property: linearity and interval additivity")
{
    const double tol = 1e-10;
    auto f = [](double s) { return std::exp(s) * std::cos(3.0 * s); };
    auto g = [](double s) { return 1.0 / (1.0 + s * s); };
    for (double a : {-1.0, 0.0, 0.3}) {
        for (double b : {0.5, 1.0, 2.0}) {
            if (b <= a) continue;
            const double fi = integrate_1d(f, a, b, tol).value;
            const double gi = integrate_1d(g, a, b, tol).value;
            const double lin = integrate_1d([&](double s) { return 2.0 * f(s) - 3.0 * g(s); }, a, b, tol).value;
            CHECK(std::abs(lin - (2.0 * fi - 3.0 * gi)) <= 2.0 * tol * 5.0);
            const double c = 0.5 * (a + b) + 0.1;
            const double split = integrate_1d(f, a, c, tol).value + integrate_1d(f, c, b, tol).value;
            CHECK(std::abs(split - fi) <= 2.0 * tol);
            CHECK(std::abs(gi - (std::atan(b) - std::atan(a))) <= tol);
        }
    }
}

TEST_CASE("property: convex integrands respect the midpoint and trapezoid bounds")
{
    const double tol = 1e-9;
    for (auto g : {+[](double s) { return s * s; }, +[](double s) { return std::exp(s); },
                   +[](double s) { return std::cosh(4.0 * s - 1.0); }}) {
        const double mean = integrate_1d(g, 0.0, 1.0, tol).value;
        CHECK(g(0.5) - tol <= mean);
        CHECK(mean <= 0.5 * (g(0.0) + g(1.0)) + tol);
        const InequalityVerdict v = check_hermite_hadamard(g, 0.0, 1.0, Tolerances{1e-8, tol, 1e-8});
        CHECK(v.pass);
        CHECK(v.links.size() == 4);
    }
}
