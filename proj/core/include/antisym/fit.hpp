// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fit.hpp
 * @brief Joint ridge least-squares fit of linear symmetric heads.
 *
 * All K heads share one feature vector phi(X); the prediction is
 * sum_k f_k(X) (w_k . phi(X)), linear in the stacked weights. One augmented
 * least-squares problem [A; sqrt(lambda) I] w = [b; 0] is solved by
 * column-pivoted QR, with lambda = ridge * ||A||_F^2 / columns.
 */

#pragma once

#include <antisym/ansatz.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace antisym {

struct FitReport {
    std::size_t n_train = 0;
    std::size_t n_test = 0;
    double ridge = 0.0;
    double train_rmse = 0.0; ///< relative: ||pred - psi|| / ||psi||
    double test_rmse = 0.0;
    std::uint64_t seed = 0;

    /// {"n_train":..,"n_test":..,"ridge":..,"train_rmse":..,"test_rmse":..,"seed":..}
    [[nodiscard]] std::string to_json() const;
};

struct FitResult {
    AnsatzModel model;
    FitReport report;
};

/// Rank-deficient system with ridge == 0.
class SingularFitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FitOptions {
    double separation = 1e-3; ///< rejection threshold when sampling configurations
    std::size_t threads = 0;
    KernelOptions kernel{};
};

/// Unknowns in the joint system, K * spec.dimension().
[[nodiscard]] std::size_t fit_unknowns(const DirectionSet& ys, const FeatureSpec& spec) noexcept;

/**
 * Draws n_train / n_test standard-normal configurations (separation-rejected),
 * fits the stacked weights and reports relative RMSE on both sets.
 * n_train == 0 selects 50 x fit_unknowns; n_test == 0 selects max(1, n_train / 4).
 */
[[nodiscard]] FitResult fit(const TargetOracle& target, const DirectionSet& ys, const FeatureSpec& spec,
                            std::size_t n_train, std::size_t n_test, double ridge, std::uint64_t seed,
                            const FitOptions& options = {});

/**
 * Psi = sum_k f_k(X) (w_k . features(X)) with standard-normal w drawn from
 * `seed`. Exactly representable by `fit` with the same directions and spec.
 */
[[nodiscard]] TargetOracle planted_representable_target(std::size_t n, const DirectionSet& ys,
                                                        const FeatureSpec& spec, std::uint64_t seed);

} // namespace antisym
