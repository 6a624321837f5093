// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file random.hpp
 * @brief Seeded random streams and samplers shared by checks and fits.
 *
 * Every trial draws from its own engine seeded by (seed, stream), so results
 * do not depend on how trials are spread over threads.
 */

#pragma once

#include <antisym/configuration.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace antisym {

using Rng = std::mt19937_64;

/// splitmix64 finaliser applied to (seed, stream).
[[nodiscard]] std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept;
[[nodiscard]] Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// i.i.d. standard-normal coordinates.
[[nodiscard]] Configuration random_configuration(std::size_t n, std::size_t d, Rng& rng);

/// Standard-normal configuration, redrawn until min pair distance >= separation.
[[nodiscard]] Configuration random_separated_configuration(std::size_t n, std::size_t d, double separation,
                                                           Rng& rng);

/// Uniform random permutation of 0..n-1.
[[nodiscard]] std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);

/// Uniform random unit vector in R^d (normalised Gaussian).
[[nodiscard]] std::vector<double> random_unit_vector(std::size_t d, Rng& rng);

} // namespace antisym
