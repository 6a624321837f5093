// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/log_signed.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

using namespace antisym;

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("logsigned_mul: sign and log algebra") {
    const LogSigned a = logsigned_mul({1, std::log(2.0)}, {-1, std::log(3.0)});
    CHECK(a.sign == -1);
    CHECK(a.logmag == doctest::Approx(std::log(6.0)).epsilon(1e-15));

    const LogSigned z = logsigned_mul({0, -inf}, {1, 5.0});
    CHECK(z.is_zero());
    CHECK(z.logmag == -inf);

    const LogSigned p = logsigned_mul({-1, 0.0}, {-1, 0.0});
    CHECK(p.sign == 1);
    CHECK(p.logmag == 0.0);
}

TEST_CASE("logsigned_sum: basic cases") {
    const std::vector<LogSigned> two{{1, 0.0}, {1, 0.0}};
    const LogSigned s = logsigned_sum(two);
    CHECK(s.sign == 1);
    CHECK(s.logmag == doctest::Approx(std::log(2.0)).epsilon(1e-15));

    const std::vector<LogSigned> cancel{{1, 0.0}, {-1, 0.0}};
    const LogSigned c = logsigned_sum(cancel);
    CHECK(c.is_zero());
    CHECK(c.logmag == -inf);

    const std::vector<LogSigned> big{{1, 700.0}, {1, 700.0}};
    const LogSigned b = logsigned_sum(big);
    CHECK(b.sign == 1);
    CHECK(b.logmag == doctest::Approx(700.0 + std::log(2.0)).epsilon(1e-15));
    CHECK(std::isfinite(b.logmag));

    CHECK(logsigned_sum(std::vector<LogSigned>{}).is_zero());
}

TEST_CASE("logsigned_sum: far outside double range") {
    const std::vector<LogSigned> v{{1, 5000.0}, {-1, 4999.0}};
    const LogSigned s = logsigned_sum(v);
    CHECK(s.sign == 1);
    CHECK(s.logmag == doctest::Approx(5000.0 + std::log1p(-std::exp(-1.0))).epsilon(1e-14));
}

TEST_CASE("logsigned_sum: invariant under argument order to the bit") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g(0.0, 30.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<LogSigned> v;
        for (int i = 0; i < 17; ++i) v.push_back({(rng() & 1) ? 1 : -1, g(rng)});
        v.push_back(LogSigned::zero());
        const LogSigned ref = logsigned_sum(v);
        for (int s = 0; s < 10; ++s) {
            std::shuffle(v.begin(), v.end(), rng);
            const LogSigned got = logsigned_sum(v);
            CHECK(got.sign == ref.sign);
            CHECK(got.logmag == ref.logmag);
        }
    }
}

TEST_CASE("logsigned_sum matches plain summation in range") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<LogSigned> v;
        double plain = 0.0;
        for (int i = 0; i < 8; ++i) {
            const double x = u(rng);
            plain += x;
            v.push_back(LogSigned::from_real(x));
        }
        CHECK(logsigned_sum(v).to_real() == doctest::Approx(plain).epsilon(1e-9));
    }
}

TEST_CASE("from_real / to_real round trip") {
    for (double x : {-3.5, -1e-300, 0.0, 1e-300, 2.0, 1e300}) {
        const LogSigned l = LogSigned::from_real(x);
        CHECK(l.to_real() == doctest::Approx(x).epsilon(1e-12));
    }
    CHECK(LogSigned::from_real(0.0) == LogSigned::zero());
    CHECK(LogSigned::make(0, 3.0) == LogSigned::zero());
}

TEST_CASE("log_sum_exp") {
    const std::vector<double> xs{1000.0, 1000.0};
    CHECK(log_sum_exp(xs) == doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-15));
    CHECK(log_sum_exp(std::vector<double>{}) == -inf);
    const std::vector<double> ys{-inf, 0.0};
    CHECK(log_sum_exp(ys) == 0.0);
}

TEST_CASE("ScaledProduct keeps huge products representable") {
    ScaledProduct p;
    for (int i = 0; i < 2000; ++i) p.multiply(1e10);
    CHECK(p.sign() == 1);
    CHECK(p.log_abs() == doctest::Approx(2000.0 * std::log(1e10)).epsilon(1e-12));

    ScaledProduct q;
    for (int i = 0; i < 2000; ++i) q.multiply(-1e-10);
    CHECK(q.sign() == 1);
    CHECK(q.log_abs() == doctest::Approx(-2000.0 * std::log(1e10)).epsilon(1e-12));
    q.multiply(-1.0);
    CHECK(q.sign() == -1);
    q.multiply(0.0);
    CHECK(q.is_zero());
    CHECK(q.value().is_zero());
}
