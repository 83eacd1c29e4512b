#pragma once

#include "csineq/matrix.hpp"

#include <cstdint>

namespace csineq {

/// Default diagonal floor for positive definite instances.
inline constexpr double kDefaultPdFloor = 0.05;

/// G G* / ||G G*||_2 for a square factor G (zero factor gives zero).
MatrixC psd_from_factor(const MatrixC& g);
/// (psd_from_factor(G) + floor I) / (1 + floor)
MatrixC pd_from_factor(const MatrixC& g, double floor);
/// G / ||G||_2 (zero stays zero).
MatrixC unit_spectral(const MatrixC& g);

/// Wishart-type PSD matrix with unit spectral norm; deterministic per (n, seed).
MatrixC gen_psd(std::size_t n, std::uint64_t seed);
/// gen_psd shifted by floor * I and renormalised; min eigenvalue >= floor / (1 + floor).
MatrixC gen_pd(std::size_t n, std::uint64_t seed, double floor = kDefaultPdFloor);
/// Ginibre matrix scaled to unit spectral norm.
MatrixC gen_general(std::size_t n, std::uint64_t seed);

} // namespace csineq
