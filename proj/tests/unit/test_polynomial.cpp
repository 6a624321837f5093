// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/polynomial.hpp>
#include <antisym/random.hpp>

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace antisym;

namespace {

Polynomial naive_from_roots(const std::vector<double>& roots) {
    std::vector<double> c{1.0};
    for (double r : roots) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return Polynomial(c);
}

Polynomial random_poly(std::size_t size, Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> c(size);
    for (auto& v : c) v = u(rng);
    return Polynomial(c);
}

} // namespace

TEST_CASE("poly_from_roots: small cases") {
    CHECK(poly_from_roots(std::vector<double>{0}).coeffs == std::vector<double>{0, 1});
    CHECK(poly_from_roots(std::vector<double>{1, -1}).coeffs == std::vector<double>{-1, 0, 1});
    CHECK(poly_from_roots(std::vector<double>{0, 1, 2}).coeffs == std::vector<double>{0, 2, -3, 1});
    CHECK(poly_from_roots(std::vector<double>{}).coeffs == std::vector<double>{1});
}

TEST_CASE("poly_from_roots matches naive convolution above the FFT threshold") {
    Rng rng = make_rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> roots(80);
    for (auto& r : roots) r = u(rng) * 0.9;
    const Polynomial fast = poly_from_roots(roots);
    const Polynomial ref = naive_from_roots(roots);
    REQUIRE(fast.coeffs.size() == ref.coeffs.size());
    CHECK(fast.coeffs.back() == 1.0);
    // Evaluate both at points where the product is well conditioned.
    for (double t : {1.3, -1.2, 1.05}) {
        double direct = 1.0;
        for (double r : roots) direct *= (t - r);
        CHECK(fast(t) == doctest::Approx(direct).epsilon(1e-8));
        CHECK(ref(t) == doctest::Approx(direct).epsilon(1e-8));
    }
}

TEST_CASE("multiply: FFT path agrees with schoolbook") {
    Rng rng = make_rng(4);
    const Polynomial a = random_poly(100, rng);
    const Polynomial b = random_poly(70, rng);
    const Polynomial c = multiply(a, b);
    REQUIRE(c.coeffs.size() == 169);
    for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
        double ref = 0.0;
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            if (k >= i && k - i < b.coeffs.size()) ref += a.coeffs[i] * b.coeffs[k - i];
        CHECK(c.coeffs[k] == doctest::Approx(ref).epsilon(1e-10).scale(10.0));
    }
}

TEST_CASE("derivative and divmod") {
    CHECK(derivative(Polynomial({0, 2, -3, 1})).coeffs == std::vector<double>{2, -6, 3});
    CHECK(derivative(Polynomial({5})).is_zero());

    const DivMod small = divmod(Polynomial({-1, 0, 1}), Polynomial({-1, 1}));
    CHECK(small.quotient.coeffs == std::vector<double>{1, 1});
    CHECK(small.remainder.is_zero());

    // Divisors shaped like subproduct-tree nodes; sizes cover schoolbook and Newton routes.
    Rng rng = make_rng(8);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    for (std::size_t asize : {5u, 40u, 200u}) {
        for (std::size_t broots : {1u, 16u, 89u}) {
            std::vector<double> roots(broots);
            for (auto& r : roots) r = u(rng);
            const Polynomial a = random_poly(asize, rng);
            const Polynomial b = poly_from_roots(roots);
            const DivMod qr = divmod(a, b);
            CHECK(qr.remainder.degree() < b.degree());
            const Polynomial qb = multiply(qr.quotient, b);
            double scale = 1.0;
            for (double c : qb.coeffs) scale = std::max(scale, std::abs(c));
            for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
                const double got = (i < qb.coeffs.size() ? qb.coeffs[i] : 0.0) +
                                   (i < qr.remainder.coeffs.size() ? qr.remainder.coeffs[i] : 0.0);
                CHECK(std::abs(got - a.coeffs[i]) <= 1e-9 * scale);
            }
        }
    }
    CHECK_THROWS_AS((void)divmod(Polynomial({1, 2}), Polynomial()), std::domain_error);
}

TEST_CASE("divmod: Newton route on a well-conditioned divisor") {
    // Lower coefficients small relative to the leading one keep the quotient O(1).
    Rng rng = make_rng(10);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t bsize : {300u, 400u}) {
        std::vector<double> bc(bsize);
        for (auto& c : bc) c = u(rng) * 0.5 / static_cast<double>(bsize);
        bc.back() = 1.0;
        const Polynomial a = random_poly(1200, rng);
        const Polynomial b(bc);
        const DivMod qr = divmod(a, b);
        CHECK(qr.remainder.degree() < b.degree());
        const Polynomial qb = multiply(qr.quotient, b);
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            const double got = (i < qb.coeffs.size() ? qb.coeffs[i] : 0.0) +
                               (i < qr.remainder.coeffs.size() ? qr.remainder.coeffs[i] : 0.0);
            CHECK(std::abs(got - a.coeffs[i]) <= 1e-12);
        }
    }
}

TEST_CASE("multipoint_eval: small cases") {
    const auto v = multipoint_eval(Polynomial({-1, 0, 1}), std::vector<double>{0, 1, 2});
    CHECK(v == std::vector<double>{-1, 0, 3});
    const auto c = multipoint_eval(Polynomial({5}), std::vector<double>{-3, 0.25, 8, 1e3});
    for (double x : c) CHECK(x == 5.0);
    CHECK(multipoint_eval(Polynomial({1, 1}), std::vector<double>{}).empty());
}

TEST_CASE("multipoint_eval: degree 63 against Horner") {
    Rng rng = make_rng(63);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 10; ++rep) {
        const Polynomial p = random_poly(64, rng);
        std::vector<double> pts(64);
        for (auto& x : pts) x = u(rng);
        const auto got = multipoint_eval(p, pts);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double ref = p(pts[i]);
            CHECK(std::abs(got[i] - ref) <= 1e-8 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("multipoint_eval: remainder tree over many points") {
    Rng rng = make_rng(64);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t size : {20u, 71u}) {
        const Polynomial p = random_poly(size, rng);
        std::vector<double> pts(500);
        for (auto& x : pts) x = u(rng);
        const auto got = multipoint_eval(p, pts);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double ref = p(pts[i]);
            CHECK(std::abs(got[i] - ref) <= 1e-8 * std::max(1.0, std::abs(ref)));
        }
    }
}
