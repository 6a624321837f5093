// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file support.hpp
 * @brief Empirical checks that the basis zero sets intersect only on coincidences.
 *
 * Off the coincidence set, sum_k f_k^2 = 1 forces max_k |f_k| >= K^{-1/2}
 * whenever at least one raw value is nonzero. A configuration with all raw
 * values zero but no coincident pair is a counterexample; both checks below
 * count such configurations (and any other floor violation) as failures.
 */

#pragma once

#include <antisym/basis.hpp>
#include <antisym/configuration.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace antisym {

struct SupportReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    double min_max_basis = 1.0; ///< smallest max_k |f_k| observed
    std::uint64_t seed = 0;

    // Diagnostics (not part of the serialised record).
    double floor = 0.0;                     ///< K^{-1/2}
    double max_normalization_error = 0.0;   ///< max |sum_k f_k^2 - 1|
    double max_abs_basis = 0.0;             ///< max_k |f_k| over everything seen
    double min_log_norm = std::numeric_limits<double>::infinity();
    std::size_t evaluations = 0;

    /// {"trials":..,"failures":..,"min_max_basis":..,"seed":..}
    [[nodiscard]] std::string to_json() const;
};

struct SupportCheckOptions {
    std::size_t threads = 0;
    /// Extra configurations evaluated after the random trials (counted as trials).
    std::vector<Configuration> planted;
    KernelOptions kernel{};
};

/**
 * Samples `trials` standard-normal configurations of n particles, rejecting
 * those with min pair distance below `separation`, and checks the
 * max_k |f_k| >= K^{-1/2} - 1e-9 floor on each. Throws std::invalid_argument
 * for trials == 0 or separation <= 0.
 */
[[nodiscard]] SupportReport monte_carlo_support_check(const DirectionSet& ys, std::size_t n, std::size_t trials,
                                                      double separation, std::uint64_t seed,
                                                      const SupportCheckOptions& options = {});

struct AdversarialOptions {
    std::size_t threads = 0;
    std::size_t max_evaluations = 0; ///< per restart; 0 = 400 * (n*d)
    KernelOptions kernel{};
};

/**
 * Multi-start Nelder-Mead minimisation of ln sum_k f~_k^2 over configurations
 * rescaled to unit coordinate spread, with a penalty below `separation`.
 * Reports the smallest max_k |f_k| seen on admissible configurations.
 */
[[nodiscard]] SupportReport adversarial_support_search(const DirectionSet& ys, std::size_t n, double separation,
                                                       std::size_t restarts, std::uint64_t seed,
                                                       const AdversarialOptions& options = {});

/**
 * A configuration off the coincidence set on which every raw basis value is
 * zero: particles spaced `separation` apart along a vector orthogonal to all
 * directions. Exists only when the directions do not span R^d.
 */
[[nodiscard]] std::optional<Configuration> plant_orthogonal_configuration(const DirectionSet& ys, std::size_t n,
                                                                          double separation);

} // namespace antisym
