// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/ansatz.hpp>
#include <antisym/determinant.hpp>
#include <antisym/permutation.hpp>
#include <antisym/random.hpp>
#include <antisym/targets.hpp>
#include <antisym/vandermonde.hpp>

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

using namespace antisym;

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("dense_determinant") {
    CHECK(dense_determinant(std::vector<double>{1, 0, 0, 0, 1, 0, 0, 0, 1}, 3) == 1.0);
    CHECK(dense_determinant(std::vector<double>{1, 2, 3, 4}, 2) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(dense_determinant(std::vector<double>{1, 2, 2, 4}, 2) == 0.0);
    CHECK(dense_determinant(std::vector<double>{0, 1, 1, 0}, 2) == -1.0);
    CHECK(dense_determinant(std::vector<double>{7.5}, 1) == 7.5);
    CHECK_THROWS_AS((void)dense_determinant(std::vector<double>{1, 2, 3}, 2), std::invalid_argument);
}

TEST_CASE("vandermonde_envelope_target") {
    const TargetOracle t = vandermonde_envelope_target(2, {1.0}, inf);
    CHECK(t(Configuration(2, 1, {0, 1})) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(t.kind() == TargetKind::vandermonde_envelope);

    const TargetOracle e = vandermonde_envelope_target(3, {0.6, 0.8}, 2.0);
    Rng rng = make_rng(1);
    const Configuration x = random_configuration(3, 2, rng);
    CHECK(e(x.swapped(0, 2)) == doctest::Approx(-e(x)).epsilon(1e-14));
    CHECK(e(Configuration(3, 2, {1, 2, 1, 2, 3, 4})) == 0.0);
    CHECK_THROWS_AS((void)vandermonde_envelope_target(2, {1.0, 1.0}, 2.0), std::invalid_argument);
    CHECK_THROWS_AS((void)vandermonde_envelope_target(2, {1.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)e(Configuration(2, 2)), std::invalid_argument);
}

TEST_CASE("slater_closed_form_target") {
    const TargetOracle two = slater_closed_form_target(1, {OrbitalSpec{{0}}, OrbitalSpec{{1}}});
    CHECK(two(Configuration(2, 1, {0.25, 2.0})) == doctest::Approx(1.75));

    const TargetOracle dup = slater_closed_form_target(1, {OrbitalSpec{{1}}, OrbitalSpec{{1}}});
    CHECK(dup(Configuration(2, 1, {0.3, -1.1})) == 0.0);

    // (1, x, x^2) is the Vandermonde matrix.
    const TargetOracle v = slater_closed_form_target(1, {OrbitalSpec{{0}}, OrbitalSpec{{1}}, OrbitalSpec{{2}}});
    Rng rng = make_rng(2);
    for (int rep = 0; rep < 20; ++rep) {
        const Configuration x = random_configuration(3, 1, rng);
        const double ref = pair_count_sign(3) * product_of_differences_naive(x.data()).to_real();
        CHECK(v(x) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("default_orbitals are distinct graded monomials") {
    const auto o = default_orbitals(6, 2, 2.0);
    REQUIRE(o.size() == 6);
    CHECK(o[0].powers == std::vector<int>{0, 0});
    for (std::size_t i = 0; i < o.size(); ++i)
        for (std::size_t j = i + 1; j < o.size(); ++j) CHECK(o[i].powers != o[j].powers);
}

TEST_CASE("brute_force_antisymmetrize") {
    Rng rng = make_rng(3);
    const ConfigFunction sym = [](const Configuration& x) { return std::cos(x(0, 0) + x(1, 0) + x(2, 0)); };
    for (int rep = 0; rep < 10; ++rep)
        CHECK(std::abs(brute_force_antisymmetrize(sym, random_configuration(3, 1, rng))) <= 1e-15);

    const ConfigFunction first = [](const Configuration& x) { return x(0, 0); };
    CHECK(brute_force_antisymmetrize(first, Configuration(2, 1, {3.0, 1.0})) == doctest::Approx(1.0));

    const ConfigFunction as = [](const Configuration& x) {
        return (x(0, 0) - x(1, 0)) * (x(0, 0) - x(2, 0)) * (x(1, 0) - x(2, 0));
    };
    const Configuration x = random_configuration(3, 1, rng);
    CHECK(brute_force_antisymmetrize(as, x) == doctest::Approx(as(x)).epsilon(1e-13));
    CHECK(brute_force_antisymmetrize(first, Configuration(3, 1, {0.5, 2.0, 0.5})) == 0.0);
    CHECK_THROWS_AS((void)brute_force_antisymmetrize(first, Configuration(9, 1)), std::invalid_argument);
}

TEST_CASE("brute_force_target is antisymmetric and nontrivial") {
    const TargetOracle t = brute_force_target(SeedSpec::random(4, 2, 5));
    Rng rng = make_rng(4);
    const Configuration x = random_configuration(4, 2, rng);
    CHECK(std::abs(t(x)) > 1e-12);
    const auto pi = random_permutation(4, rng);
    CHECK(t(x.permuted(pi)) == doctest::Approx(permutation_sign(pi) * t(x)).epsilon(1e-12));
}

TEST_CASE("every bundled target is antisymmetric") {
    for (auto kind : {TargetKind::vandermonde_envelope, TargetKind::slater_closed_form, TargetKind::brute_force}) {
        for (std::size_t n = 2; n <= 5; ++n) {
            for (std::size_t d = 1; d <= 3; ++d) {
                const TargetOracle t = bundled_target(kind, n, d, 7);
                CHECK(antisymmetry_deviation([&](const Configuration& x) { return t(x); }, n, d, 30, 1, 1) <= 1e-10);
            }
        }
    }
    CHECK_THROWS_AS((void)bundled_target(TargetKind::custom, 2, 1, 0), std::invalid_argument);
}

TEST_CASE("target kinds and JSON specs") {
    CHECK(target_kind_from_string(to_string(TargetKind::brute_force)) == TargetKind::brute_force);
    CHECK_THROWS_AS((void)target_kind_from_string("nope"), std::invalid_argument);

    const TargetOracle s = target_from_json(R"({"kind":"slater_closed_form","n":2,"d":1,
        "parameters":{"orbitals":[{"powers":[0]},{"powers":[1]}]}})");
    CHECK(s(Configuration(2, 1, {0.0, 1.0})) == doctest::Approx(1.0));

    const TargetOracle v = target_from_json(R"({"kind":"vandermonde_envelope","n":3,"d":2,"parameters":{"seed":4}})");
    CHECK(v.n() == 3);
    CHECK(v.d() == 2);

    CHECK_THROWS_AS((void)target_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS((void)target_from_json(R"({"kind":"brute_force","n":1,"d":1})"), std::invalid_argument);
    CHECK_THROWS_AS((void)target_from_json(R"({"kind":"custom","n":2,"d":1})"), std::invalid_argument);
    CHECK_THROWS_AS((void)target_from_json(R"({"n":2,"d":1})"), std::invalid_argument);
}
