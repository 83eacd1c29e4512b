#include "csineq/generators.hpp"

#include "csineq/errors.hpp"
#include "csineq/linalg.hpp"
#include "csineq/random.hpp"

namespace csineq {

MatrixC psd_from_factor(const MatrixC& g)
{
    MatrixC a = hermitian_part(g * adjoint(g));
    const double s = spectral_norm(a);
    if (s > 0.0) a *= 1.0 / s;
    return a;
}

MatrixC pd_from_factor(const MatrixC& g, double floor)
{
    if (!(floor > 0.0)) throw Error(Errc::InvalidParams, "pd floor must be positive");
    MatrixC a = psd_from_factor(g) + floor * MatrixC::identity(g.n());
    a *= 1.0 / (1.0 + floor);
    return a;
}

MatrixC unit_spectral(const MatrixC& g)
{
    MatrixC x = g;
    const double s = spectral_norm(x);
    if (s > 0.0) x *= 1.0 / s;
    return x;
}

MatrixC gen_psd(std::size_t n, std::uint64_t seed)
{
    Rng rng(seed);
    return psd_from_factor(ginibre(n, rng));
}

MatrixC gen_pd(std::size_t n, std::uint64_t seed, double floor)
{
    Rng rng(seed);
    return pd_from_factor(ginibre(n, rng), floor);
}

MatrixC gen_general(std::size_t n, std::uint64_t seed)
{
    Rng rng(seed);
    return unit_spectral(ginibre(n, rng));
}

} // namespace csineq
