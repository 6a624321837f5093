// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/permutation.hpp>
#include <antisym/random.hpp>
#include <antisym/vandermonde.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace antisym;

namespace {

std::vector<double> gapped_draw(std::size_t n, double gap, Rng& rng) {
    std::normal_distribution<double> g;
    for (;;) {
        std::vector<double> s(n);
        for (auto& v : s) v = g(rng);
        std::vector<double> t = s;
        std::sort(t.begin(), t.end());
        bool ok = true;
        for (std::size_t i = 1; i < n && ok; ++i) ok = t[i] - t[i - 1] >= gap;
        if (ok) return s;
    }
}

void check_close(LogSigned a, LogSigned b, double rel) {
    REQUIRE(a.sign == b.sign);
    CHECK(std::abs(a.logmag - b.logmag) <= rel * std::max(1.0, std::abs(b.logmag)));
}

} // namespace

TEST_CASE("product_of_differences: small cases") {
    const LogSigned a = product_of_differences(std::vector<double>{0, 1});
    CHECK(a.sign == -1);
    CHECK(a.logmag == 0.0);

    CHECK(product_of_differences(std::vector<double>{0, 1, 2}).to_real() == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(product_of_differences(std::vector<double>{1, 1, 5}).is_zero());
    CHECK(product_of_differences(std::vector<double>{1, 1, 5}).logmag == -std::numeric_limits<double>::infinity());

    const LogSigned one = product_of_differences(std::vector<double>{4.0});
    CHECK(one.sign == 1);
    CHECK(one.logmag == 0.0);
}

TEST_CASE("product_of_differences_naive: hand expansions") {
    CHECK(product_of_differences_naive(std::vector<double>{0, 1, 2}).to_real() == doctest::Approx(-2.0));
    CHECK(product_of_differences_naive(std::vector<double>{2, 1, 0}).to_real() == doctest::Approx(2.0));
    CHECK(product_of_differences_naive(std::vector<double>{0.5, 3, 0.5}).is_zero());
    CHECK(product_of_differences_fast(std::vector<double>{0.5, 3, 0.5}).is_zero());
    CHECK(product_of_differences_sorted(std::vector<double>{0.5, 3, 0.5}).is_zero());
}

TEST_CASE("Vandermonde identity: prod P'(s_i) = (-1)^{N(N-1)/2} V^2") {
    // s = (0,1,2): P' values 2, -1, 2.
    const LogSigned d3 = derivative_product_at_roots(std::vector<double>{0, 1, 2});
    CHECK(d3.to_real() == doctest::Approx(-4.0).epsilon(1e-12));

    Rng rng = make_rng(77);
    for (std::size_t n = 2; n <= 24; ++n) {
        const auto s = gapped_draw(n, 1e-3, rng);
        const LogSigned v = product_of_differences_naive(s);
        const LogSigned lhs = derivative_product_at_roots(s);
        CHECK(lhs.sign == pair_count_sign(n));
        CHECK(std::abs(lhs.logmag - 2.0 * v.logmag) <= 1e-8 * std::max(1.0, std::abs(2.0 * v.logmag)));
    }
}

TEST_CASE("transposition flips the sign and keeps logmag to the bit") {
    Rng rng = make_rng(12);
    for (std::size_t n : {2u, 3u, 7u, 40u, 64u, 65u, 200u, 777u}) {
        auto s = gapped_draw(n, 1e-9, rng);
        const LogSigned a = product_of_differences(s);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::size_t i = pick(rng), j = pick(rng);
        while (j == i) j = pick(rng);
        std::swap(s[i], s[j]);
        const LogSigned b = product_of_differences(s);
        CHECK(b.sign == -a.sign);
        CHECK(b.logmag == a.logmag);
    }
}

TEST_CASE("sign equals parity times pair-count sign") {
    Rng rng = make_rng(13);
    for (std::size_t n = 2; n < 300; n += 37) {
        const auto s = gapped_draw(n, 1e-9, rng);
        const int expect = inversion_parity(s).sign * pair_count_sign(n);
        CHECK(product_of_differences_fast(s).sign == expect);
        CHECK(product_of_differences_sorted(s).sign == expect);
    }
}

TEST_CASE("fast path agrees with naive oracle across sizes") {
    Rng rng = make_rng(99);
    for (std::size_t n : {2u, 3u, 5u, 16u, 17u, 33u, 64u, 100u, 257u, 512u, 1024u}) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto s = gapped_draw(n, 1e-6, rng);
            check_close(product_of_differences_fast(s), product_of_differences_naive(s), 1e-8);
        }
    }
}

TEST_CASE("fast path: clustered and widely spread roots") {
    Rng rng = make_rng(100);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    // Two tight clusters far apart.
    std::vector<double> s;
    for (int i = 0; i < 150; ++i) s.push_back(1e4 + i * 1e-5 + 1e-7 * u(rng));
    for (int i = 0; i < 150; ++i) s.push_back(-3.0 + i * 2e-6 + 1e-8 * u(rng));
    check_close(product_of_differences_fast(s), product_of_differences_naive(s), 1e-8);

    // Geometric spread over many decades.
    std::vector<double> g;
    for (int i = 0; i < 300; ++i) g.push_back((i % 2 ? -1.0 : 1.0) * std::pow(1.1, i));
    check_close(product_of_differences_fast(g), product_of_differences_naive(g), 1e-8);
}

TEST_CASE("crossover option routes to either path with the same answer") {
    Rng rng = make_rng(101);
    const auto s = gapped_draw(90, 1e-6, rng);
    const LogSigned lo = product_of_differences(s, KernelOptions{1});
    const LogSigned hi = product_of_differences(s, KernelOptions{1000});
    check_close(lo, hi, 1e-12);
}
