#include "csineq/random.hpp"

#include <cmath>

namespace csineq {

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) noexcept
{
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t index) noexcept
{
    return splitmix64(splitmix64(master ^ fnv1a(label)) + splitmix64(index + 0x632be59bd9b4e019ULL));
}

MatrixC ginibre(std::size_t n, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    MatrixC g(n);
    for (auto& z : g.entries()) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = cplx(re, im);
    }
    return g;
}

std::vector<cplx> random_unit_vector(std::size_t n, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<cplx> x(n);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& z : x) {
            const double re = normal(rng);
            const double im = normal(rng);
            z = cplx(re, im);
            norm2 += std::norm(z);
        }
    } while (norm2 == 0.0);
    const double s = 1.0 / std::sqrt(norm2);
    for (auto& z : x) z *= s;
    return x;
}

} // namespace csineq
