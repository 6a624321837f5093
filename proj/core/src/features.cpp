// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/features.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace antisym {

namespace {

void append_power_sums(std::vector<double> values, std::size_t max_power, std::vector<double>& out) {
    std::sort(values.begin(), values.end());
    std::vector<double> pw(values.size(), 1.0);
    for (std::size_t p = 1; p <= max_power; ++p) {
        double acc = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            pw[i] *= values[i];
            acc += pw[i];
        }
        out.push_back(acc);
    }
}

} // namespace

std::vector<double> symmetric_features(const FeatureSpec& spec, const Configuration& x) {
    if (spec.directions.d() != x.d()) throw std::invalid_argument("symmetric_features: dimension mismatch");
    std::vector<double> out;
    out.reserve(spec.dimension());
    for (std::size_t k = 0; k < spec.directions.k_count(); ++k)
        append_power_sums(project(spec.directions[k], x), spec.max_power, out);
    if (spec.include_pair_distances) {
        std::vector<double> dist;
        dist.reserve(x.n() * (x.n() - 1) / 2);
        for (std::size_t i = 0; i < x.n(); ++i)
            for (std::size_t j = i + 1; j < x.n(); ++j) {
                double sq = 0.0;
                for (std::size_t l = 0; l < x.d(); ++l) {
                    const double diff = x(i, l) - x(j, l);
                    sq += diff * diff;
                }
                dist.push_back(std::sqrt(sq));
            }
        append_power_sums(std::move(dist), spec.max_power, out);
    }
    return out;
}

} // namespace antisym
