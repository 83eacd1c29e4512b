#pragma once

#include "csineq/matrix.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace csineq {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// FNV-1a over the bytes of a string.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL) noexcept;

/// Seed for one independent stream, a pure function of its path.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t index) noexcept;

/// n x n matrix of independent standard complex Gaussians (E|z|^2 = 1).
MatrixC ginibre(std::size_t n, Rng& rng);

/// Uniformly distributed unit vector in C^n.
std::vector<cplx> random_unit_vector(std::size_t n, Rng& rng);

} // namespace csineq
