// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file basis.hpp
 * @brief Pairwise-projection antisymmetric basis.
 *
 * For a direction y, f~_y(X) = prod_{i<j} y.(X_i - X_j). A set of K directions
 * gives K raw values, normalised as f_k = f~_k / sqrt(sum_i f~_i^2) off the
 * coincidence set and 0 on it. With K = dN + 1 directions drawn uniformly on
 * the sphere the denominator is almost surely nonzero away from coincidences.
 */

#pragma once

#include <antisym/configuration.hpp>
#include <antisym/log_signed.hpp>
#include <antisym/vandermonde.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace antisym {

struct BasisEvaluation {
    std::vector<LogSigned> raw;     ///< f~_k(X)
    std::vector<double> normalized; ///< f_k(X)
    bool on_omega = false;          ///< two rows exactly equal
    /// Off the coincidence set but every raw value is zero; normalized is all 0.
    bool denominator_vanished = false;
    /// ln sqrt(sum_k f~_k^2); -inf when the sum is zero.
    double log_norm = -std::numeric_limits<double>::infinity();

    [[nodiscard]] double max_abs_normalized() const noexcept;
};

/**
 * K directions drawn independently and uniformly from the unit sphere
 * (normalised standard-normal vectors). K defaults to d*n + 1.
 */
[[nodiscard]] DirectionSet sample_directions(std::size_t n, std::size_t d,
                                             std::optional<std::size_t> k_override, std::uint64_t seed);

[[nodiscard]] LogSigned tilde_f(std::span<const double> y, const Configuration& x,
                                const KernelOptions& options = {});

[[nodiscard]] BasisEvaluation evaluate_basis(const DirectionSet& ys, const Configuration& x,
                                             const KernelOptions& options = {});

} // namespace antisym
