// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file log_signed.hpp
 * @brief Signed log-domain numbers.
 *
 * A product of N(N-1)/2 pairwise differences leaves double range long before
 * N reaches a hundred, so every raw basis value is carried as (sign, ln|x|).
 * Zero has the unique representation (0, -inf).
 */

#pragma once

#include <cstdint>
#include <limits>
#include <span>

namespace antisym {

struct LogSigned {
    int sign = 0;                                                ///< -1, 0 or +1
    double logmag = -std::numeric_limits<double>::infinity();   ///< ln|x|

    [[nodiscard]] static constexpr LogSigned zero() noexcept { return {}; }
    [[nodiscard]] static LogSigned from_real(double x) noexcept;
    /// Builds (sign, logmag), collapsing to zero() when sign == 0 or logmag == -inf.
    [[nodiscard]] static LogSigned make(int sign, double logmag) noexcept;

    [[nodiscard]] bool is_zero() const noexcept { return sign == 0; }
    /// sign * exp(logmag); saturates to +-inf / 0 outside double range.
    [[nodiscard]] double to_real() const noexcept;

    friend bool operator==(const LogSigned&, const LogSigned&) = default;
};

[[nodiscard]] LogSigned logsigned_mul(LogSigned a, LogSigned b) noexcept;
[[nodiscard]] inline LogSigned operator*(LogSigned a, LogSigned b) noexcept {
    return logsigned_mul(a, b);
}

/**
 * Sum of signed log-domain values.
 *
 * The largest magnitude is factored out before exponentiating, so terms near
 * e^700 do not overflow. Terms are first put in a canonical order, which makes
 * the result bit-identical under any permutation of the input.
 */
[[nodiscard]] LogSigned logsigned_sum(std::span<const LogSigned> values);

/// ln(sum_i exp(x_i)); returns -inf for an empty input or all -inf.
[[nodiscard]] double log_sum_exp(std::span<const double> xs) noexcept;

/**
 * Running product of doubles with an explicit binary exponent.
 *
 * The mantissa is kept in [2^-500, 2^500] so long products of small or large
 * factors never underflow or overflow.
 */
class ScaledProduct {
public:
    void multiply(double factor) noexcept {
        const double af = factor < 0.0 ? -factor : factor;
        if (af <= kHigh && af >= kLow) {
            mantissa_ *= factor;
            const double am = mantissa_ < 0.0 ? -mantissa_ : mantissa_;
            if (am <= kHigh && am >= kLow) return;
        } else if (mantissa_ != 0.0) {
            multiply_slow(factor);
            return;
        }
        renormalize();
    }

    [[nodiscard]] bool is_zero() const noexcept { return mantissa_ == 0.0; }
    [[nodiscard]] int sign() const noexcept {
        return mantissa_ > 0.0 ? 1 : (mantissa_ < 0.0 ? -1 : 0);
    }
    /// ln|product|; -inf for zero.
    [[nodiscard]] double log_abs() const noexcept;
    [[nodiscard]] LogSigned value() const noexcept { return LogSigned::make(sign(), log_abs()); }

private:
    static constexpr double kHigh = 0x1p500;
    static constexpr double kLow = 0x1p-500;
    void multiply_slow(double factor) noexcept;
    void renormalize() noexcept;

    double mantissa_ = 1.0;
    std::int64_t exponent_ = 0;
};

} // namespace antisym
