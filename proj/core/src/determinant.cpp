// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/determinant.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace antisym {

double dense_determinant(std::span<const double> matrix, std::size_t n) {
    if (matrix.size() != n * n) throw std::invalid_argument("dense_determinant: matrix is not n x n");
    if (n == 0) return 1.0;
    std::vector<double> a(matrix.begin(), matrix.end());
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(a[col * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(a[r * n + col]);
            if (v > best) best = v, pivot = r;
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
            det = -det;
        }
        const double diag = a[col * n + col];
        det *= diag;
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a[r * n + col] / diag;
            if (factor == 0.0) continue;
            for (std::size_t c = col + 1; c < n; ++c) a[r * n + c] -= factor * a[col * n + c];
        }
    }
    return det;
}

} // namespace antisym
