#include "doctest.h"

#include "csineq/errors.hpp"
#include "csineq/linalg.hpp"
#include "csineq/matrix.hpp"
#include "csineq/random.hpp"
#include "csineq/scalar_fn.hpp"
#include "support.hpp"

#include <cmath>
#include <limits>

using namespace csineq;
using testing::max_diff;

TEST_CASE("matrix construction rejects non-finite entries")
{
    CHECK_THROWS_AS(MatrixC(2, {1.0, 2.0, std::numeric_limits<double>::quiet_NaN(), 0.0}), Error);
    CHECK_THROWS_AS(MatrixC::diag({1.0, std::numeric_limits<double>::infinity()}), Error);
    try {
        MatrixC(1, {cplx(0.0, std::numeric_limits<double>::infinity())});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonFinite);
    }
    CHECK_THROWS_AS(MatrixC(2, {1.0, 2.0, 3.0}), Error);
}

TEST_CASE("ring operations")
{
    const MatrixC a = MatrixC::from_rows({{1.0, cplx(2.0, -1.0)}, {cplx(0.5, 3.0), -4.0}});
    CHECK(mul(a, MatrixC::identity(2)) == a);
    CHECK(adjoint(adjoint(a)) == a);
    const MatrixC e12 = MatrixC::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    const MatrixC e21 = MatrixC::from_rows({{0.0, 0.0}, {1.0, 0.0}});
    CHECK(mul(e12, e21) == MatrixC::from_rows({{1.0, 0.0}, {0.0, 0.0}}));
    CHECK(adjoint(a)(0, 1) == std::conj(a(1, 0)));
    CHECK((a + a) == 2.0 * a);
    CHECK((a - a) == MatrixC::zeros(2));
    CHECK(trace(a) == cplx(-3.0, 0.0));
    CHECK_THROWS_AS(mul(a, MatrixC::identity(3)), Error);
}

TEST_CASE("hadamard product")
{
    const MatrixC a = MatrixC::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    const MatrixC b = MatrixC::from_rows({{5.0, 6.0}, {7.0, 8.0}});
    CHECK(hadamard(a, b) == MatrixC::from_rows({{5.0, 12.0}, {21.0, 32.0}}));
    CHECK(hadamard(a, b) == hadamard(b, a));
    CHECK(hadamard(a, MatrixC::ones(2)) == a);
    CHECK(hadamard(MatrixC::diag({1.0, 2.0, 3.0}), MatrixC::diag({4.0, 5.0, 6.0})) == MatrixC::diag({4.0, 10.0, 18.0}));
    try {
        hadamard(a, MatrixC::identity(3));
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DimensionMismatch);
    }
}

TEST_CASE("herm_eig examples")
{
    const HermEig id = herm_eig(MatrixC::identity(3));
    for (double v : id.values) CHECK(v == doctest::Approx(1.0));
    CHECK(max_diff(mul(adjoint(id.vectors), id.vectors), MatrixC::identity(3)) < 1e-14);

    const HermEig d = herm_eig(MatrixC::diag({5.0, 2.0, -1.0}));
    CHECK(d.values[0] == 5.0);
    CHECK(d.values[1] == 2.0);
    CHECK(d.values[2] == -1.0);

    // Characteristic polynomial of [[a, b], [conj b, c]]: (a + c)/2 +- sqrt(((a - c)/2)^2 + |b|^2).
    const HermEig two = herm_eig(MatrixC::from_rows({{2.0, 1.0}, {1.0, 2.0}}));
    CHECK(two.values[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(two.values[1] == doctest::Approx(1.0).epsilon(1e-14));

    const MatrixC c = MatrixC::from_rows({{1.0, cplx(2.0, 3.0)}, {cplx(2.0, -3.0), -2.0}});
    const double disc = std::sqrt(1.5 * 1.5 + 13.0);
    const HermEig ce = herm_eig(c);
    CHECK(ce.values[0] == doctest::Approx(-0.5 + disc).epsilon(1e-14));
    CHECK(ce.values[1] == doctest::Approx(-0.5 - disc).epsilon(1e-14));
}

TEST_CASE("herm_eig rejects non-Hermitian input")
{
    try {
        herm_eig(MatrixC::from_rows({{0.0, 1.0}, {0.0, 0.0}}));
        FAIL("expected NotHermitian");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotHermitian);
    }
}

TEST_CASE("property: eigen reconstruction of random Hermitian matrices")
{
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const MatrixC a = testing::random_hermitian(n, rng);
        const HermEig e = herm_eig(a);
        for (std::size_t i = 1; i < n; ++i) CHECK(e.values[i - 1] >= e.values[i]);
        const double err = frobenius_norm(reconstruct(e.vectors, e.values) - a);
        CHECK(err <= 1e-10 * std::max(1.0, frobenius_norm(a)));
        CHECK(max_diff(mul(adjoint(e.vectors), e.vectors), MatrixC::identity(n)) < 1e-12);
    }
}

TEST_CASE("singular value examples")
{
    const SingularSpectrum d = singular_values(MatrixC::diag({3.0, -4.0}));
    CHECK(d.values[0] == doctest::Approx(4.0));
    CHECK(d.values[1] == doctest::Approx(3.0));

    const SingularSpectrum nil = singular_values(MatrixC::from_rows({{0.0, 1.0}, {0.0, 0.0}}));
    CHECK(nil.values[0] == doctest::Approx(1.0));
    CHECK(nil.values[1] == 0.0);

    // M*M = [[2,2],[2,2]] has eigenvalues 4 and 0.
    const SingularSpectrum ones = singular_values(MatrixC::ones(2));
    CHECK(ones.values[0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(std::abs(ones.values[1]) < 1e-15);

    CHECK(spectral_norm(MatrixC::from_rows({{0.0, 2.0}, {0.0, 0.0}})) == doctest::Approx(2.0));
}

TEST_CASE("property: singular values are unitarily invariant and square to eig(M*M)")
{
    Rng rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const MatrixC m = ginibre(n, rng);
        const MatrixC u = testing::random_unitary(n, rng);
        const MatrixC v = testing::random_unitary(n, rng);
        const SingularSpectrum s = singular_values(m);
        const SingularSpectrum t = singular_values(mul(mul(u, m), v));
        const HermEig g = herm_eig(mul(adjoint(m), m));
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) CHECK(s.values[i - 1] >= s.values[i]);
            CHECK(s.values[i] >= 0.0);
            CHECK(std::abs(s.values[i] - t.values[i]) <= 1e-9 * s.max());
            CHECK(std::abs(s.values[i] * s.values[i] - g.values[i]) <= 1e-10 * g.values[0]);
        }
    }
}

TEST_CASE("singular values keep relative accuracy for graded matrices")
{
    const SingularSpectrum s = singular_values(MatrixC::diag({1.0, 1e-6, 1e-12}));
    CHECK(s.values[2] == doctest::Approx(1e-12).epsilon(1e-14));
}

TEST_CASE("psd_power examples")
{
    CHECK(max_diff(psd_power(MatrixC::diag({4.0, 9.0}), 0.5), MatrixC::diag({2.0, 3.0})) < 1e-14);

    const MatrixC pd = MatrixC::from_rows({{2.0, 1.0}, {1.0, 2.0}});
    CHECK(psd_power(pd, 0.0) == MatrixC::identity(2));
    CHECK(psd_power(pd, 1.0) == pd);

    // Eigenvectors (1,1)/sqrt2 and (1,-1)/sqrt2 with eigenvalues 3 and 1.
    const double r3 = std::sqrt(3.0);
    const MatrixC expect = MatrixC::from_rows({{(r3 + 1.0) / 2.0, (r3 - 1.0) / 2.0}, {(r3 - 1.0) / 2.0, (r3 + 1.0) / 2.0}});
    CHECK(max_diff(psd_power(pd, 0.5), expect) < 1e-14);

    // Singular PSD matrix: 0^0 = 1.
    CHECK(psd_power(MatrixC::diag({1.0, 0.0}), 0.0) == MatrixC::identity(2));
}

TEST_CASE("psd_power errors")
{
    try {
        psd_power(MatrixC::diag({1.0, -0.5}), 0.5);
        FAIL("expected NotPSD");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPSD);
    }
    try {
        psd_power(MatrixC::diag({1.0, 0.0}), -0.5);
        FAIL("expected SingularForNegativePower");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SingularForNegativePower);
    }
    // Roundoff-level negative eigenvalue is clamped.
    CHECK_NOTHROW(psd_power(MatrixC::diag({1.0, -1e-13}), 0.5));
    CHECK(psd_power(MatrixC::diag({1.0, -1e-13}), 0.5)(1, 1) == 0.0);
}

TEST_CASE("property: psd_power exponent laws")
{
    Rng rng(303);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const MatrixC g = ginibre(n, rng);
        const MatrixC a = mul(g, adjoint(g));
        const PsdSpectrum sp(a);
        const double s = unit(rng);
        const double t = unit(rng);
        const MatrixC lhs = sp.power(s + t);
        CHECK(max_diff(lhs, mul(sp.power(s), sp.power(t))) <= 1e-9 * std::max(1.0, max_abs(lhs)));

        const double u = 0.25 + 0.75 * unit(rng);
        const MatrixC back = psd_power(sp.power(u), 1.0 / u);
        CHECK(max_diff(back, a) <= 1e-8 * max_abs(a));
    }
}

TEST_CASE("matrix_fn examples")
{
    const MatrixC d = matrix_fn(MatrixC::diag({1.0, std::exp(1.0) - 1.0}), ScalarFn::log1p());
    CHECK(d(0, 0).real() == doctest::Approx(std::log(2.0)));
    CHECK(d(1, 1).real() == doctest::Approx(1.0));

    const MatrixC s = matrix_fn(MatrixC::identity(3), ScalarFn::sqrt());
    CHECK(max_diff(s, MatrixC::identity(3)) < 1e-15);
    const MatrixC l = matrix_fn(MatrixC::identity(2), ScalarFn::log1p());
    CHECK(max_diff(l, std::log(2.0) * MatrixC::identity(2)) < 1e-15);

    const MatrixC q = matrix_fn(MatrixC::diag({4.0}), ScalarFn::t_over_log1p());
    CHECK(q(0, 0).real() == doctest::Approx(4.0 / std::log(5.0)));

    try {
        matrix_fn(MatrixC::diag({1.0, -1.0}), ScalarFn::sqrt());
        FAIL("expected DomainViolation");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DomainViolation);
    }
    CHECK_THROWS_AS(matrix_fn(MatrixC::diag({1.0, 0.0}), ScalarFn::t_over_log1p()), Error);
}

TEST_CASE("property: functions of one positive definite matrix multiply")
{
    Rng rng(404);
    const ScalarFn fns[] = {ScalarFn::power(0.3), ScalarFn::log1p(), ScalarFn::t_over_log1p(), ScalarFn::sqrt()};
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const MatrixC g = ginibre(n, rng);
        const MatrixC a = mul(g, adjoint(g)) + 0.1 * MatrixC::identity(n);
        const ScalarFn& f = fns[trial % 4];
        const ScalarFn& h = fns[(trial / 4) % 4];
        const MatrixC prod = mul(matrix_fn(a, f), matrix_fn(a, h));
        // f h as a table-free check: evaluate the product on the spectrum directly.
        const HermEig e = herm_eig(a);
        std::vector<double> w;
        for (double l : e.values) w.push_back(f(l) * h(l));
        const MatrixC direct = reconstruct(e.vectors, w);
        CHECK(max_diff(prod, direct) <= 1e-9 * std::max(1.0, max_abs(direct)));
    }
}

TEST_CASE("scalar functions")
{
    CHECK(ScalarFn::power(0.0)(0.0) == 1.0);
    CHECK(ScalarFn::power(2.0)(3.0) == doctest::Approx(9.0));
    CHECK_THROWS_AS(ScalarFn::power(-1.0)(0.0), Error);
    CHECK(ScalarFn::parse("pow:0.25").alpha() == 0.25);
    CHECK(ScalarFn::parse("log1p").kind() == ScalarFn::Kind::Log1p);
    CHECK_THROWS_AS(ScalarFn::parse("cosh"), Error);
    const ScalarFn tbl = ScalarFn::table({0.0, 1.0, 3.0}, {0.0, 2.0, 3.0});
    CHECK(tbl(0.5) == doctest::Approx(1.0));
    CHECK(tbl(2.0) == doctest::Approx(2.5));
    CHECK_THROWS_AS(tbl(4.0), Error);
    const ScalarFn q = ScalarFn::quotient(ScalarFn::log1p(), ScalarFn::t_over_log1p());
    CHECK(q(2.0) == doctest::Approx(std::log(3.0) * std::log(3.0) / 2.0));
    CHECK(ScalarFn::t_over_log1p()(1e-12) == doctest::Approx(1.0));
}
