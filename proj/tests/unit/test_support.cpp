// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/basis.hpp>
#include <antisym/support.hpp>

#include <json.hpp>
#include <doctest.h>

#include <cmath>

using namespace antisym;

TEST_CASE("Monte Carlo check: K = dN+1 has no failures") {
    const DirectionSet ys = sample_directions(3, 3, std::nullopt, 1);
    const SupportReport r = monte_carlo_support_check(ys, 3, 20000, 1e-3, 42);
    CHECK(r.trials == 20000);
    CHECK(r.failures == 0);
    CHECK(r.min_max_basis >= 1.0 / std::sqrt(10.0) - 1e-9);
    CHECK(r.max_normalization_error <= 1e-12);
    CHECK(r.max_abs_basis <= 1.0);
    CHECK(r.floor == doctest::Approx(1.0 / std::sqrt(10.0)));
}

TEST_CASE("Monte Carlo check: planted orthogonal pair is caught") {
    const DirectionSet ys = sample_directions(2, 2, 1, 9);
    const auto planted = plant_orthogonal_configuration(ys, 2, 1.0);
    REQUIRE(planted.has_value());
    CHECK(min_pair_distance(*planted) >= 1.0);
    CHECK(tilde_f(ys[0], *planted).is_zero());

    SupportCheckOptions opt;
    opt.planted.push_back(*planted);
    const SupportReport r = monte_carlo_support_check(ys, 2, 100, 1.0, 3, opt);
    CHECK(r.failures >= 1);
    CHECK(r.min_max_basis == 0.0);
}

TEST_CASE("plant_orthogonal_configuration: impossible when K >= dN+1 in general position") {
    const DirectionSet ys = sample_directions(2, 2, std::nullopt, 9);
    CHECK_FALSE(plant_orthogonal_configuration(ys, 2, 1.0).has_value());
    // d=1: a single direction is never orthogonal to a nonzero difference.
    CHECK_FALSE(plant_orthogonal_configuration(DirectionSet(1, 1, {1}), 2, 1.0).has_value());
}

TEST_CASE("Monte Carlo check: precondition errors") {
    const DirectionSet ys = sample_directions(2, 2, std::nullopt, 1);
    CHECK_THROWS_AS((void)monte_carlo_support_check(ys, 2, 0, 1e-3, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)monte_carlo_support_check(ys, 2, 10, 0.0, 1), std::invalid_argument);
}

TEST_CASE("Monte Carlo check: identical across thread counts") {
    const DirectionSet ys = sample_directions(4, 2, std::nullopt, 2);
    SupportCheckOptions one;
    one.threads = 1;
    SupportCheckOptions four;
    four.threads = 4;
    const SupportReport a = monte_carlo_support_check(ys, 4, 3000, 1e-3, 7, one);
    const SupportReport b = monte_carlo_support_check(ys, 4, 3000, 1e-3, 7, four);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.min_max_basis == b.min_max_basis);
    CHECK(a.max_normalization_error == b.max_normalization_error);
}

TEST_CASE("SupportReport JSON carries the documented fields") {
    const DirectionSet ys = sample_directions(2, 1, std::nullopt, 2);
    const auto j = nlohmann::json::parse(monte_carlo_support_check(ys, 2, 50, 1e-3, 5).to_json());
    CHECK(j.at("trials") == 50);
    CHECK(j.at("failures") == 0);
    CHECK(j.contains("min_max_basis"));
    CHECK(j.at("seed") == 5);
}

TEST_CASE("adversarial search respects the floor") {
    AdversarialOptions opt;
    opt.max_evaluations = 400;
    const DirectionSet ys2 = sample_directions(2, 2, std::nullopt, 11);
    const SupportReport a = adversarial_support_search(ys2, 2, 1e-3, 100, 5, opt);
    CHECK(a.failures == 0);
    CHECK(a.min_max_basis >= 1.0 / std::sqrt(5.0) - 1e-9);

    const DirectionSet ys1 = sample_directions(2, 1, std::nullopt, 11);
    const SupportReport b = adversarial_support_search(ys1, 2, 1e-3, 20, 5, opt);
    CHECK(b.failures == 0);
    CHECK(b.min_max_basis >= 1.0 / std::sqrt(3.0) - 1e-9);

    CHECK_THROWS_AS((void)adversarial_support_search(ys2, 2, 0.0, 3, 5, opt), std::invalid_argument);
    CHECK_THROWS_AS((void)adversarial_support_search(ys2, 2, 1e-3, 0, 5, opt), std::invalid_argument);
}

TEST_CASE("adversarial search: two independent directions already suffice for N=2, d=2") {
    // X_1 - X_2 orthogonal to two independent vectors in the plane forces X_1 = X_2.
    AdversarialOptions opt;
    opt.max_evaluations = 2000;
    const DirectionSet ys = sample_directions(2, 2, 2, 3);
    const SupportReport r = adversarial_support_search(ys, 2, 1e-3, 10, 5, opt);
    CHECK(r.min_max_basis >= 1.0 / std::sqrt(2.0) - 1e-9);
    CHECK(r.evaluations > 0);
}
