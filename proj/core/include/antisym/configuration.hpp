// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file configuration.hpp
 * @brief Particle configurations, direction sets and the coincidence set.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace antisym {

/// N x d matrix of particle coordinates, row i = particle i. Row-major.
class Configuration {
public:
    /// All-zero configuration. Requires n >= 2 and d >= 1.
    Configuration(std::size_t n, std::size_t d);
    /// Requires coords.size() == n * d and every entry finite.
    Configuration(std::size_t n, std::size_t d, std::vector<double> coords);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t d() const noexcept { return d_; }

    [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
        return {coords_.data() + i * d_, d_};
    }
    [[nodiscard]] std::span<double> row(std::size_t i) noexcept { return {coords_.data() + i * d_, d_}; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t l) const noexcept { return coords_[i * d_ + l]; }
    [[nodiscard]] double& operator()(std::size_t i, std::size_t l) noexcept { return coords_[i * d_ + l]; }
    [[nodiscard]] const std::vector<double>& data() const noexcept { return coords_; }

    /// Row i of the result is row perm[i] of this configuration.
    [[nodiscard]] Configuration permuted(std::span<const std::size_t> perm) const;
    [[nodiscard]] Configuration swapped(std::size_t i, std::size_t j) const;
    void swap_rows(std::size_t i, std::size_t j) noexcept;
    /// Every coordinate multiplied by c.
    [[nodiscard]] Configuration scaled(double c) const;

    /// Squared Frobenius norm, sum of all squared coordinates.
    [[nodiscard]] double squared_norm() const noexcept;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::size_t n_;
    std::size_t d_;
    std::vector<double> coords_;
};

/// K unit vectors in R^d, row k = y_k.
class DirectionSet {
public:
    /// Validates that every row has unit Euclidean norm within 1e-12.
    DirectionSet(std::size_t k, std::size_t d, std::vector<double> dirs);

    [[nodiscard]] std::size_t k_count() const noexcept { return k_; }
    [[nodiscard]] std::size_t d() const noexcept { return d_; }
    [[nodiscard]] std::span<const double> operator[](std::size_t k) const noexcept {
        return {dirs_.data() + k * d_, d_};
    }
    [[nodiscard]] const std::vector<double>& data() const noexcept { return dirs_; }

    /// Plain-text matrix: "K d" then K rows of d values, 17 significant digits.
    void write(std::ostream& os) const;
    [[nodiscard]] std::string to_text() const;
    /// Inverse of write(); throws std::runtime_error on malformed input.
    [[nodiscard]] static DirectionSet read(std::istream& is);
    [[nodiscard]] static DirectionSet from_text(const std::string& text);

    friend bool operator==(const DirectionSet&, const DirectionSet&) = default;

private:
    std::size_t k_;
    std::size_t d_;
    std::vector<double> dirs_;
};

/// The default count K = d*N + 1.
[[nodiscard]] constexpr std::size_t default_direction_count(std::size_t n, std::size_t d) noexcept {
    return d * n + 1;
}

/// s_i = y . X_i. Throws std::invalid_argument on a dimension mismatch.
[[nodiscard]] std::vector<double> project(std::span<const double> y, const Configuration& x);

/// min_{i<j} |X_i - X_j| <= tol. tol = 0 tests exact row equality.
[[nodiscard]] bool is_coincident(const Configuration& x, double tol);

/// min_{i<j} |X_i - X_j|.
[[nodiscard]] double min_pair_distance(const Configuration& x);

} // namespace antisym
