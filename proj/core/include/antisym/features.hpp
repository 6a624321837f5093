// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <antisym/configuration.hpp>

#include <vector>

namespace antisym {

/**
 * Permutation-invariant features: for each direction y_k and p = 1..P the
 * power sum sum_i (y_k . X_i)^p, optionally followed by sum_{i<j} |X_i - X_j|^p.
 * Values are summed in sorted order, so features(pi X) == features(X) bit for bit.
 */
struct FeatureSpec {
    std::size_t max_power = 3;
    DirectionSet directions;
    bool include_pair_distances = false;

    [[nodiscard]] std::size_t dimension() const noexcept {
        return max_power * (directions.k_count() + (include_pair_distances ? 1 : 0));
    }
};

[[nodiscard]] std::vector<double> symmetric_features(const FeatureSpec& spec, const Configuration& x);

} // namespace antisym
