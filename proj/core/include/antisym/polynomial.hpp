// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file polynomial.hpp
 * @brief Dense real polynomials and the subproduct-tree algorithms.
 *
 * Coefficients are stored in ascending degree order. Multiplication switches
 * from schoolbook to FFT convolution above a small size, division uses Newton
 * iteration on the reversed divisor, and multipoint evaluation walks a
 * remainder tree, for O(M log^2 M) total work.
 *
 * These routines work in the monomial basis and inherit its conditioning:
 * they are accurate for well-scaled coefficients and moderate degree, not for
 * products of hundreds of real linear factors.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace antisym {

struct Polynomial {
    std::vector<double> coeffs; ///< coeffs[i] multiplies t^i

    Polynomial() = default;
    explicit Polynomial(std::vector<double> c);

    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return coeffs.empty(); }
    /// Horner evaluation.
    [[nodiscard]] double operator()(double t) const noexcept;

    /// Drops trailing zero coefficients (the leading-coefficient invariant).
    void trim() noexcept;
};

[[nodiscard]] Polynomial multiply(const Polynomial& a, const Polynomial& b);
[[nodiscard]] Polynomial derivative(const Polynomial& p);

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};
/// Euclidean division; throws std::domain_error on a zero divisor.
[[nodiscard]] DivMod divmod(const Polynomial& a, const Polynomial& b);

/// prod_i (t - roots_i) via a balanced subproduct tree. Always monic.
[[nodiscard]] Polynomial poly_from_roots(std::span<const double> roots);

/// p(x) for every x in points, via a remainder tree over the points.
[[nodiscard]] std::vector<double> multipoint_eval(const Polynomial& p, std::span<const double> points);

} // namespace antisym
