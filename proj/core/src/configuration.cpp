// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/configuration.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace antisym {

Configuration::Configuration(std::size_t n, std::size_t d) : Configuration(n, d, std::vector<double>(n * d, 0.0)) {}

Configuration::Configuration(std::size_t n, std::size_t d, std::vector<double> coords)
    : n_(n), d_(d), coords_(std::move(coords)) {
    if (n < 2) throw std::invalid_argument("Configuration: need at least two particles");
    if (d < 1) throw std::invalid_argument("Configuration: dimension must be positive");
    if (coords_.size() != n * d) throw std::invalid_argument("Configuration: coordinate count != n*d");
    for (double v : coords_)
        if (!std::isfinite(v)) throw std::invalid_argument("Configuration: non-finite coordinate");
}

Configuration Configuration::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) throw std::invalid_argument("Configuration::permuted: wrong length");
    std::vector<double> out(coords_.size());
    for (std::size_t i = 0; i < n_; ++i) {
        const auto src = row(perm[i]);
        std::copy(src.begin(), src.end(), out.begin() + static_cast<std::ptrdiff_t>(i * d_));
    }
    return {n_, d_, std::move(out)};
}

Configuration Configuration::swapped(std::size_t i, std::size_t j) const {
    Configuration out = *this;
    out.swap_rows(i, j);
    return out;
}

void Configuration::swap_rows(std::size_t i, std::size_t j) noexcept {
    if (i == j) return;
    std::swap_ranges(coords_.begin() + static_cast<std::ptrdiff_t>(i * d_),
                     coords_.begin() + static_cast<std::ptrdiff_t>((i + 1) * d_),
                     coords_.begin() + static_cast<std::ptrdiff_t>(j * d_));
}

Configuration Configuration::scaled(double c) const {
    std::vector<double> out(coords_);
    for (double& v : out) v *= c;
    return {n_, d_, std::move(out)};
}

double Configuration::squared_norm() const noexcept {
    double acc = 0.0;
    for (double v : coords_) acc += v * v;
    return acc;
}

DirectionSet::DirectionSet(std::size_t k, std::size_t d, std::vector<double> dirs)
    : k_(k), d_(d), dirs_(std::move(dirs)) {
    if (k < 1) throw std::invalid_argument("DirectionSet: need at least one direction");
    if (d < 1) throw std::invalid_argument("DirectionSet: dimension must be positive");
    if (dirs_.size() != k * d) throw std::invalid_argument("DirectionSet: entry count != K*d");
    for (std::size_t r = 0; r < k; ++r) {
        double sq = 0.0;
        for (double v : (*this)[r]) sq += v * v;
        if (!(std::abs(std::sqrt(sq) - 1.0) <= 1e-12))
            throw std::invalid_argument("DirectionSet: row " + std::to_string(r) + " is not a unit vector");
    }
}

void DirectionSet::write(std::ostream& os) const {
    const auto flags = os.flags();
    const auto prec = os.precision();
    os << k_ << ' ' << d_ << '\n' << std::setprecision(17);
    for (std::size_t r = 0; r < k_; ++r) {
        const auto y = (*this)[r];
        for (std::size_t l = 0; l < d_; ++l) os << (l ? " " : "") << y[l];
        os << '\n';
    }
    os.flags(flags);
    os.precision(prec);
}

std::string DirectionSet::to_text() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

DirectionSet DirectionSet::read(std::istream& is) {
    std::size_t k = 0, d = 0;
    if (!(is >> k >> d)) throw std::runtime_error("DirectionSet::read: missing 'K d' header");
    std::vector<double> dirs(k * d);
    for (double& v : dirs)
        if (!(is >> v)) throw std::runtime_error("DirectionSet::read: truncated matrix");
    return {k, d, std::move(dirs)};
}

DirectionSet DirectionSet::from_text(const std::string& text) {
    std::istringstream is(text);
    return read(is);
}

std::vector<double> project(std::span<const double> y, const Configuration& x) {
    if (y.size() != x.d()) throw std::invalid_argument("project: direction/configuration dimension mismatch");
    std::vector<double> s(x.n());
    for (std::size_t i = 0; i < x.n(); ++i) {
        const auto xi = x.row(i);
        double acc = 0.0;
        for (std::size_t l = 0; l < y.size(); ++l) acc += y[l] * xi[l];
        s[i] = acc;
    }
    return s;
}

double min_pair_distance(const Configuration& x) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.n(); ++i)
        for (std::size_t j = i + 1; j < x.n(); ++j) {
            double sq = 0.0;
            for (std::size_t l = 0; l < x.d(); ++l) {
                const double diff = x(i, l) - x(j, l);
                sq += diff * diff;
            }
            best = std::min(best, std::sqrt(sq));
        }
    return best;
}

bool is_coincident(const Configuration& x, double tol) {
    if (tol < 0.0) throw std::invalid_argument("is_coincident: tol must be non-negative");
    if (tol == 0.0) {
        for (std::size_t i = 0; i < x.n(); ++i)
            for (std::size_t j = i + 1; j < x.n(); ++j) {
                const auto a = x.row(i), b = x.row(j);
                if (std::equal(a.begin(), a.end(), b.begin())) return true;
            }
        return false;
    }
    return min_pair_distance(x) <= tol;
}

} // namespace antisym
