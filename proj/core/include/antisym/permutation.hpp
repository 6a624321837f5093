// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace antisym {

/// Sorting permutation of a sequence and its parity.
struct SortParity {
    int sign = 1;                         ///< (-1)^{#inversions}
    std::vector<std::size_t> permutation; ///< permutation[i] = index of the i-th smallest value
    bool has_ties = false;                ///< equal values present (broken by original index)
};

/**
 * Stable merge sort of indices that counts inversions on the way.
 *
 * O(N log N). Ties are not inversions; they are ordered by original index and
 * flagged in the result so callers can treat the tie case themselves.
 */
[[nodiscard]] SortParity inversion_parity(std::span<const double> values);

/// Sign of a permutation given as an index vector (cycle decomposition).
[[nodiscard]] int permutation_sign(std::span<const std::size_t> perm);

} // namespace antisym
