// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/permutation.hpp>

#include <numeric>
#include <stdexcept>

namespace antisym {

SortParity inversion_parity(std::span<const double> values) {
    const std::size_t n = values.size();
    SortParity out;
    out.permutation.resize(n);
    std::iota(out.permutation.begin(), out.permutation.end(), std::size_t{0});
    if (n < 2) return out;

    std::vector<std::size_t> buffer(n);
    std::size_t inversions_mod2 = 0;
    auto& idx = out.permutation;

    // Bottom-up merge sort; counts, for each element taken from the right run,
    // how many remaining left-run elements are strictly greater.
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo < n; lo += 2 * width) {
            const std::size_t mid = std::min(lo + width, n);
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                const double a = values[idx[i]];
                const double b = values[idx[j]];
                if (b < a) {
                    inversions_mod2 += (mid - i) & 1U;
                    buffer[k++] = idx[j++];
                } else {
                    buffer[k++] = idx[i++];
                }
            }
            while (i < mid) buffer[k++] = idx[i++];
            while (j < hi) buffer[k++] = idx[j++];
        }
        idx.swap(buffer);
    }
    for (std::size_t i = 1; i < n && !out.has_ties; ++i)
        if (values[idx[i]] == values[idx[i - 1]]) out.has_ties = true;

    out.sign = (inversions_mod2 & 1U) ? -1 : 1;
    return out;
}

int permutation_sign(std::span<const std::size_t> perm) {
    const std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    int sign = 1;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::size_t len = 0;
        for (std::size_t j = start; !seen[j]; j = perm[j]) {
            if (perm[j] >= n) throw std::invalid_argument("permutation_sign: index out of range");
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

} // namespace antisym
