// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/log_signed.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace antisym {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kHigh = 0x1p500;
constexpr double kLow = 0x1p-500;

} // namespace

LogSigned LogSigned::from_real(double x) noexcept {
    if (x == 0.0) return zero();
    return {x > 0.0 ? 1 : -1, std::log(std::abs(x))};
}

LogSigned LogSigned::make(int sign, double logmag) noexcept {
    if (sign == 0 || logmag == kNegInf) return zero();
    return {sign > 0 ? 1 : -1, logmag};
}

double LogSigned::to_real() const noexcept {
    if (sign == 0) return 0.0;
    return sign * std::exp(logmag);
}

LogSigned logsigned_mul(LogSigned a, LogSigned b) noexcept {
    if (a.is_zero() || b.is_zero()) return LogSigned::zero();
    return {a.sign * b.sign, a.logmag + b.logmag};
}

LogSigned logsigned_sum(std::span<const LogSigned> values) {
    std::vector<LogSigned> terms;
    terms.reserve(values.size());
    for (const auto& v : values)
        if (!v.is_zero()) terms.push_back(v);
    if (terms.empty()) return LogSigned::zero();

    // Ascending magnitude; ties ordered by sign. Equal keys are equal values.
    std::sort(terms.begin(), terms.end(), [](const LogSigned& a, const LogSigned& b) {
        if (a.logmag != b.logmag) return a.logmag < b.logmag;
        return a.sign < b.sign;
    });

    const double shift = terms.back().logmag;
    double acc = 0.0;
    for (const auto& t : terms) acc += t.sign * std::exp(t.logmag - shift);
    if (acc == 0.0) return LogSigned::zero();
    return {acc > 0.0 ? 1 : -1, shift + std::log(std::abs(acc))};
}

double log_sum_exp(std::span<const double> xs) noexcept {
    double shift = kNegInf;
    for (double x : xs) shift = std::max(shift, x);
    if (shift == kNegInf) return kNegInf;
    if (std::isinf(shift)) return shift;
    double acc = 0.0;
    for (double x : xs) acc += std::exp(x - shift);
    return shift + std::log(acc);
}

void ScaledProduct::multiply_slow(double factor) noexcept {
    // |factor| outside [2^-500, 2^500], or zero.
    if (factor == 0.0) {
        mantissa_ = 0.0;
        return;
    }
    int e = 0;
    factor = std::frexp(factor, &e);
    exponent_ += e;
    mantissa_ *= factor;
    renormalize();
}

void ScaledProduct::renormalize() noexcept {
    // Zero mantissa stays zero; frexp(0) leaves the exponent alone.
    const double am = std::abs(mantissa_);
    if (mantissa_ == 0.0 || (am <= kHigh && am >= kLow)) return;
    int e = 0;
    mantissa_ = std::frexp(mantissa_, &e);
    exponent_ += e;
}

double ScaledProduct::log_abs() const noexcept {
    if (mantissa_ == 0.0) return kNegInf;
    return std::log(std::abs(mantissa_)) + static_cast<double>(exponent_) * std::numbers::ln2;
}

} // namespace antisym
