// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/determinant.hpp>
#include <antisym/random.hpp>
#include <antisym/slater.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <stdexcept>
#include <vector>

using namespace antisym;

namespace {

TargetOracle difference_target() { return slater_closed_form_target(1, {OrbitalSpec{{1}}, OrbitalSpec{{0}}}); }

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double max_abs_entry(const OrbitalMatrix& m) {
    double v = 0.0;
    for (double e : m.entries) v = std::max(v, std::abs(e));
    return v;
}

} // namespace

TEST_CASE("phi_k: hand example and ties") {
    const DirectionSet ys(3, 1, {1, 1, 1});
    const TargetOracle t = difference_target();
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(phi_k(t, ys, k, Configuration(2, 1, {0, 1})) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

    const DirectionSet y2(1, 2, {1, 0});
    const TargetOracle t2 = bundled_target(TargetKind::slater_closed_form, 2, 2, 0);
    CHECK(phi_k(t2, y2, 0, Configuration(2, 2, {0.5, 1, 0.5, -2})) == 0.0);
    CHECK_THROWS_AS((void)phi_k(t, ys, 3, Configuration(2, 1, {0, 1})), std::invalid_argument);
}

TEST_CASE("build_orbital_matrix: hand example with the sign column") {
    const DirectionSet ys(3, 1, {1, 1, 1});
    const OrbitalMatrix m = build_orbital_matrix(difference_target(), ys, 0, Configuration(2, 1, {0, 1}));
    CHECK(m.permutation == std::vector<std::size_t>{0, 1});
    CHECK(m.permutation_sign == 1);
    CHECK(m(0, 0) == doctest::Approx(-std::sqrt(1.0 / 3.0)).epsilon(1e-15));
    CHECK(m(1, 1) == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-15));
    CHECK(m(0, 1) == 0.0);
    CHECK(m(1, 0) == 0.0);
    CHECK(m.sparse_determinant() == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

    // Reversed particle order: pi is the swap and the determinant flips sign.
    const OrbitalMatrix r = build_orbital_matrix(difference_target(), ys, 0, Configuration(2, 1, {1, 0}));
    CHECK(r.permutation_sign == -1);
    CHECK(r.sparse_determinant() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("build_orbital_matrix: ties give the zero matrix") {
    const DirectionSet ys(1, 2, {1, 0});
    const TargetOracle t = bundled_target(TargetKind::slater_closed_form, 3, 2, 0);
    const OrbitalMatrix m = build_orbital_matrix(t, ys, 0, Configuration(3, 2, {0.5, 1, 0.5, -2, 3, 3}));
    CHECK(m.tied);
    CHECK(max_abs_entry(m) == 0.0);
    CHECK(m.sparse_determinant() == 0.0);
    CHECK(dense_determinant(m.entries, 3) == 0.0);
}

TEST_CASE("orbital matrices: sparsity, identities, both parities") {
    Rng rng = make_rng(31);
    for (auto kind : {TargetKind::vandermonde_envelope, TargetKind::slater_closed_form, TargetKind::brute_force}) {
        for (std::size_t n = 2; n <= 6; ++n) {
            for (std::size_t d = 1; d <= 3; ++d) {
                const TargetOracle t = bundled_target(kind, n, d, 2);
                const DirectionSet ys = sample_directions(n, d, std::nullopt, 9);
                for (int rep = 0; rep < 3; ++rep) {
                    const Configuration x = random_configuration(n, d, rng);
                    for (std::size_t k = 0; k < ys.k_count(); ++k) {
                        const OrbitalMatrix m = build_orbital_matrix(t, ys, k, x);
                        const double det = m.sparse_determinant();
                        const double ref = phi_k(t, ys, k, x);
                        CHECK(rel(det, ref) <= 1e-10);
                        CHECK(rel(dense_determinant(m.entries, n), det) <= 1e-10);
                        for (std::size_t row = 0; row < n; ++row) {
                            std::size_t nz_row = 0, nz_col = 0;
                            for (std::size_t c = 0; c < n; ++c) {
                                nz_row += m(row, c) != 0.0;
                                nz_col += m(c, row) != 0.0;
                            }
                            CHECK(nz_row == 1);
                            CHECK(nz_col == 1);
                        }
                        const double swapped = build_orbital_matrix(t, ys, k, x.swapped(0, n - 1)).sparse_determinant();
                        CHECK(rel(swapped, -det) <= 1e-10);
                    }
                    const DecompositionResult res = decompose(t, ys, x);
                    CHECK(res.residual <= 1e-8);
                    CHECK(res.per_determinant.size() == ys.k_count());
                }
            }
        }
    }
}

TEST_CASE("decompose on Omega is identically zero") {
    const TargetOracle t = bundled_target(TargetKind::brute_force, 3, 2, 1);
    const DirectionSet ys = sample_directions(3, 2, std::nullopt, 1);
    const DecompositionResult r = decompose(t, ys, Configuration(3, 2, {1, 2, 0, 0, 1, 2}));
    for (double v : r.per_determinant) CHECK(v == 0.0);
    CHECK(r.total == 0.0);
    CHECK(r.target_value == 0.0);
    CHECK(r.residual == 0.0);
    CHECK_THROWS_AS((void)decompose(t, ys, Configuration(4, 2)), std::invalid_argument);
}

TEST_CASE("decompose: thread count does not change values") {
    Rng rng = make_rng(2);
    const TargetOracle t = bundled_target(TargetKind::vandermonde_envelope, 5, 2, 1);
    const DirectionSet ys = sample_directions(5, 2, std::nullopt, 1);
    const Configuration x = random_configuration(5, 2, rng);
    const auto a = decompose(t, ys, x, 1);
    const auto b = decompose(t, ys, x, 4);
    CHECK(a.per_determinant == b.per_determinant);
    CHECK(a.total == b.total);
}

TEST_CASE("matrix_symmetry_audit") {
    Rng rng = make_rng(5);
    const TargetOracle t2 = bundled_target(TargetKind::slater_closed_form, 2, 2, 0);
    const DirectionSet y2 = sample_directions(2, 2, std::nullopt, 2);
    CHECK(matrix_symmetry_audit(t2, y2, 0, random_configuration(2, 2, rng), 10, 1) == 0.0);

    const TargetOracle t4 = bundled_target(TargetKind::brute_force, 4, 2, 0);
    const DirectionSet y4 = sample_directions(4, 2, std::nullopt, 2);
    const Configuration x4 = random_configuration(4, 2, rng);
    for (std::size_t k = 0; k < y4.k_count(); ++k) CHECK(matrix_symmetry_audit(t4, y4, k, x4, 20, 3) <= 1e-12);
    CHECK_THROWS_AS((void)matrix_symmetry_audit(t4, y4, 0, x4, 0, 3), std::invalid_argument);
}

TEST_CASE("tie continuity: entries shrink like |gap|^{2/N}") {
    // Move X_1 toward the hyperplane y . X = y . X_2 while staying away from X_2.
    for (std::size_t n : {2u, 3u, 4u}) {
        const DirectionSet ys = sample_directions(n, 2, std::nullopt, 17);
        const TargetOracle t = bundled_target(TargetKind::slater_closed_form, n, 2, 0);
        Rng rng = make_rng(40 + n);
        const Configuration base = random_configuration(n, 2, rng);
        const auto y = ys[0];
        const std::vector<double> perp{-y[1], y[0]};
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (double gap = 1e-2; gap >= 1e-10; gap /= 10.0) {
            Configuration x = base;
            const double target_proj = y[0] * x(1, 0) + y[1] * x(1, 1) + gap;
            // Place X_1 on the line y . X = target_proj, one unit along perp from X_2's foot.
            for (std::size_t l = 0; l < 2; ++l) x(0, l) = target_proj * y[l] + (x(1, 0) * perp[0] + x(1, 1) * perp[1] + 1.0) * perp[l];
            const double actual = std::abs((y[0] * x(0, 0) + y[1] * x(0, 1)) - (y[0] * x(1, 0) + y[1] * x(1, 1)));
            const double ratio = max_abs_entry(build_orbital_matrix(t, ys, 0, x)) /
                                 std::pow(actual, 2.0 / static_cast<double>(n));
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        CHECK(hi > 0.0);
        CHECK(hi / lo < 10.0);
    }
}

TEST_CASE("decomposition dump format") {
    const DirectionSet ys(3, 1, {1, 1, 1});
    std::ostringstream os;
    write_decomposition(difference_target(), ys, Configuration(2, 1, {0, 1}), os);
    const std::string s = os.str();
    std::size_t blocks = 0;
    for (std::size_t p = s.find("determinant "); p != std::string::npos; p = s.find("determinant ", p + 1)) ++blocks;
    CHECK(blocks == 3);
    CHECK(s.find("permutation 1 2\n") != std::string::npos);
    CHECK(s.find("orbitals -0.57735026918962573 0.57735026918962573\n") != std::string::npos);
    CHECK(s.find("\ntotal -1") != std::string::npos);
    CHECK(s.find("\ntarget -1\n") != std::string::npos);
}
