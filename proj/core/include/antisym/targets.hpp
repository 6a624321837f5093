// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file targets.hpp
 * @brief Ground-truth antisymmetric continuous functions.
 *
 * Three families: a Gaussian-damped product of projected differences, classic
 * Slater determinants over a polynomial x Gaussian orbital catalog, and the
 * brute-force antisymmetrisation of an arbitrary continuous seed function.
 */

#pragma once

#include <antisym/configuration.hpp>

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace antisym {

enum class TargetKind { vandermonde_envelope, slater_closed_form, brute_force, custom };

[[nodiscard]] std::string to_string(TargetKind kind);
/// Throws std::invalid_argument for unknown names.
[[nodiscard]] TargetKind target_kind_from_string(const std::string& name);

using ConfigFunction = std::function<double(const Configuration&)>;

class TargetOracle {
public:
    [[nodiscard]] double operator()(const Configuration& x) const;

    [[nodiscard]] TargetKind kind() const noexcept;
    [[nodiscard]] std::size_t n() const noexcept;
    [[nodiscard]] std::size_t d() const noexcept;
    [[nodiscard]] const std::string& name() const noexcept;
    /// JSON text {kind, n, d, parameters}; empty parameters for custom oracles.
    [[nodiscard]] const std::string& spec_json() const noexcept;

    /// Wraps an arbitrary callable; the caller vouches for antisymmetry.
    [[nodiscard]] static TargetOracle custom(std::size_t n, std::size_t d, std::string name, ConfigFunction f);

    struct Impl;

private:
    explicit TargetOracle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    friend TargetOracle make_target(std::shared_ptr<const Impl>);
    std::shared_ptr<const Impl> impl_;
};

/// psi(x) = prod_l x_l^{powers_l} * exp(-|x|^2 / (2 width^2)); width = inf drops the Gaussian.
struct OrbitalSpec {
    std::vector<int> powers;
    double width = std::numeric_limits<double>::infinity();

    [[nodiscard]] double operator()(std::span<const double> x) const;
};

/**
 * Non-symmetric continuous seed
 *   h(X) = exp(-|X|^2 / (2 scale^2)) cos(sum_i a_i . X_i + phase)
 *          * (1 + coupling tanh(b . X_1 |X_1 - X_2|)).
 */
struct SeedSpec {
    std::size_t n = 0, d = 0;
    std::vector<double> frequencies; ///< a, n x d row-major
    double phase = 0.0;
    std::vector<double> coupling_direction; ///< b, length d
    double coupling = 0.5;
    double scale = 2.0;

    [[nodiscard]] double operator()(const Configuration& x) const;
    [[nodiscard]] static SeedSpec random(std::size_t n, std::size_t d, std::uint64_t seed);
};

/// Psi(X) = [prod_{i<j} y*.(X_i - X_j)] exp(-|X|^2 / (2 scale^2)). |y*| must be 1.
[[nodiscard]] TargetOracle vandermonde_envelope_target(std::size_t n, std::vector<double> y_star, double scale);

/// Psi(X) = det[psi_i(X_j)] by dense LU. N = orbitals.size().
[[nodiscard]] TargetOracle slater_closed_form_target(std::size_t d, std::vector<OrbitalSpec> orbitals);

/// Psi = brute_force_antisymmetrize(seed, .). Requires seed.n <= 8.
[[nodiscard]] TargetOracle brute_force_target(SeedSpec seed);

/**
 * (1/N!) sum_{pi in S_N} sign(pi) h(X_pi(1), ..., X_pi(N)), enumerated with
 * Heap's algorithm (one transposition per step). Rejects N > 8.
 */
[[nodiscard]] double brute_force_antisymmetrize(const ConfigFunction& h, const Configuration& x);

/// The first n monomials in graded order in d variables, each times a Gaussian of `width`.
[[nodiscard]] std::vector<OrbitalSpec> default_orbitals(std::size_t n, std::size_t d, double width);

/// Deterministic representative of each family for (n, d, seed).
[[nodiscard]] TargetOracle bundled_target(TargetKind kind, std::size_t n, std::size_t d, std::uint64_t seed);

/**
 * Loads {"kind": .., "n": .., "d": .., "parameters": {..}}. Missing parameters
 * fall back to bundled_target with parameters.seed (default 0).
 * Throws std::invalid_argument on malformed specs.
 */
[[nodiscard]] TargetOracle target_from_json(const std::string& text);

} // namespace antisym
