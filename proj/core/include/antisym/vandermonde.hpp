// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file vandermonde.hpp
 * @brief Product of pairwise differences prod_{i<j} (s_i - s_j).
 *
 * This scalar Vandermonde product is the core of every basis function. Both
 * paths first sort the values; the sign comes from the sort parity times the
 * sign of the sorted product, and the magnitude is computed on the sorted
 * values only. Consequently permuting the input changes the sign by the
 * permutation's parity and leaves logmag bit-identical.
 *
 * The fast path uses the identity
 *     prod_i P'(s_i) = (-1)^{N(N-1)/2} V^2,   P(t) = prod_i (t - s_i),
 * and accumulates sum_i ln|P'(s_i)| over a balanced binary tree of the sorted
 * roots. Each tree node carries the polynomial prod_{j in node}(t - s_j) as
 * scaled power sums, i.e. the coefficients of its logarithmic expansion about
 * the node centre. Well-separated node pairs are combined through a truncated
 * two-centre series; close pairs are multiplied out directly.
 */

#pragma once

#include <antisym/log_signed.hpp>

#include <cstddef>
#include <span>

namespace antisym {

struct KernelOptions {
    /// Sizes above this use the tree path.
    std::size_t crossover = 64;
};

/// Dispatches to the direct or tree path by size. N <= 1 gives +1.
[[nodiscard]] LogSigned product_of_differences(std::span<const double> s,
                                               const KernelOptions& options = {});

/// Direct O(N^2) product in input order. Reference oracle; not used by the library.
[[nodiscard]] LogSigned product_of_differences_naive(std::span<const double> s);

/// Tree path regardless of size.
[[nodiscard]] LogSigned product_of_differences_fast(std::span<const double> s);

/// Direct pairwise product over the sorted values (the small-N path).
[[nodiscard]] LogSigned product_of_differences_sorted(std::span<const double> s);

/**
 * prod_i P'(s_i) computed through poly_from_roots, derivative and
 * multipoint_eval in the monomial basis. Only trustworthy for small N; used
 * to check the identity above.
 */
[[nodiscard]] LogSigned derivative_product_at_roots(std::span<const double> s);

/// (-1)^{N(N-1)/2}
[[nodiscard]] constexpr int pair_count_sign(std::size_t n) noexcept {
    return ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1;
}

} // namespace antisym
