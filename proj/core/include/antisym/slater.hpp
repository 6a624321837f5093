// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file slater.hpp
 * @brief Decomposition of an antisymmetric target into K generalised Slater determinants.
 *
 * Phi^k = f_k^2 Psi, and since sum_k f_k^2 = 1 off the coincidence set the
 * Phi^k add up to Psi. Each Phi^k vanishes whenever two projections on y_k
 * tie, which lets it be written as one determinant whose orbitals follow the
 * y_k-sorted order of the particles:
 *
 *   sort particles by y_k . X_j, giving pi and sign(pi);
 *   column 1 holds sign(Phi^k(X_pi)) |Phi^k(X_pi)|^{1/N} at row pi(1);
 *   column i > 1 holds |Phi^k(X_pi)|^{1/N} at row pi(i).
 *
 * The determinant is sign(pi) sign(Phi^k(X_pi)) |Phi^k(X_pi)| = Phi^k(X) for
 * every N. Putting the sign on every orbital instead only works for odd N.
 */

#pragma once

#include <antisym/basis.hpp>
#include <antisym/targets.hpp>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace antisym {

struct OrbitalMatrix {
    std::size_t n = 0;
    std::size_t direction_index = 0;
    std::vector<double> entries;          ///< row-major; (j, i) = psi_i^k(X_j | X_{!=j})
    std::vector<std::size_t> permutation; ///< permutation[i] = particle in sorted slot i
    int permutation_sign = 1;
    bool tied = false; ///< tied projections; entries are all zero

    [[nodiscard]] double operator()(std::size_t row, std::size_t col) const noexcept { return entries[row * n + col]; }
    /// Nonzero value of column i, i.e. entry (permutation[i], i).
    [[nodiscard]] std::vector<double> orbital_values() const;
    /// sign(pi) prod_i entry(pi(i), i).
    [[nodiscard]] double sparse_determinant() const noexcept;
};

struct DecompositionResult {
    std::vector<double> per_determinant; ///< det Phi^k
    double total = 0.0;
    double target_value = 0.0;
    double residual = 0.0; ///< |total - Psi| / max(1, |Psi|)
};

/// f_k(X)^2 Psi(X).
[[nodiscard]] double phi_k(const TargetOracle& target, const DirectionSet& ys, std::size_t k, const Configuration& x);

[[nodiscard]] OrbitalMatrix build_orbital_matrix(const TargetOracle& target, const DirectionSet& ys, std::size_t k,
                                                 const Configuration& x);

/**
 * For random permutations that keep particle j (chosen per trial) in place
 * and reorder the rest, compares the orbital attached to particle j (its
 * column slot and value) before and after. Returns the max discrepancy.
 */
[[nodiscard]] double matrix_symmetry_audit(const TargetOracle& target, const DirectionSet& ys, std::size_t k,
                                           const Configuration& x, std::size_t trials, std::uint64_t seed = 0);

[[nodiscard]] DecompositionResult decompose(const TargetOracle& target, const DirectionSet& ys,
                                            const Configuration& x, std::size_t threads = 1);

/**
 * Text dump: one block per determinant
 *   determinant <k> / permutation <1-based pi> / orbitals <N values> / det <v> / end
 * then footer lines total, target, residual. 17 significant digits.
 */
void write_decomposition(const TargetOracle& target, const DirectionSet& ys, const Configuration& x,
                         std::ostream& os);

} // namespace antisym
