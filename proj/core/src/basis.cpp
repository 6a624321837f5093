// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/basis.hpp>

#include <antisym/random.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace antisym {

double BasisEvaluation::max_abs_normalized() const noexcept {
    double best = 0.0;
    for (double v : normalized) best = std::max(best, std::abs(v));
    return best;
}

DirectionSet sample_directions(std::size_t n, std::size_t d, std::optional<std::size_t> k_override,
                               std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sample_directions: n must be at least 2");
    if (d < 1) throw std::invalid_argument("sample_directions: d must be at least 1");
    if (k_override && *k_override < 1) throw std::invalid_argument("sample_directions: K must be at least 1");
    const std::size_t k = k_override.value_or(default_direction_count(n, d));

    Rng rng = make_rng(seed);
    std::vector<double> dirs;
    dirs.reserve(k * d);
    for (std::size_t r = 0; r < k; ++r) {
        const auto y = random_unit_vector(d, rng);
        dirs.insert(dirs.end(), y.begin(), y.end());
    }
    return {k, d, std::move(dirs)};
}

LogSigned tilde_f(std::span<const double> y, const Configuration& x, const KernelOptions& options) {
    return product_of_differences(project(y, x), options);
}

BasisEvaluation evaluate_basis(const DirectionSet& ys, const Configuration& x, const KernelOptions& options) {
    if (ys.d() != x.d()) throw std::invalid_argument("evaluate_basis: direction/configuration dimension mismatch");
    const std::size_t k = ys.k_count();

    BasisEvaluation out;
    out.raw.resize(k);
    out.normalized.assign(k, 0.0);
    for (std::size_t r = 0; r < k; ++r) out.raw[r] = tilde_f(ys[r], x, options);

    out.on_omega = is_coincident(x, 0.0);
    if (out.on_omega) return out;

    std::vector<double> log_squares;
    log_squares.reserve(k);
    for (const auto& v : out.raw)
        if (!v.is_zero()) log_squares.push_back(2.0 * v.logmag);
    if (log_squares.empty()) {
        out.denominator_vanished = true;
        return out;
    }
    out.log_norm = 0.5 * log_sum_exp(log_squares);
    for (std::size_t r = 0; r < k; ++r) {
        const auto& v = out.raw[r];
        if (!v.is_zero()) out.normalized[r] = v.sign * std::exp(v.logmag - out.log_norm);
    }
    return out;
}

} // namespace antisym
