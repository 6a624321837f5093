// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/acceptance.hpp>

#include <antisym/ansatz.hpp>
#include <antisym/basis.hpp>
#include <antisym/fit.hpp>
#include <antisym/parallel.hpp>
#include <antisym/permutation.hpp>
#include <antisym/random.hpp>
#include <antisym/slater.hpp>
#include <antisym/support.hpp>
#include <antisym/targets.hpp>
#include <antisym/vandermonde.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace antisym::acceptance {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::array<TargetKind, 3> kKinds{TargetKind::vandermonde_envelope, TargetKind::slater_closed_form,
                                           TargetKind::brute_force};

// Stream families; every random draw in the suite hangs off seed + one of these.
enum Stream : std::uint64_t {
    support_dirs = 100,
    support_trials = 200,
    recon_target = 300,
    recon_dirs = 400,
    recon_points = 500,
    kernel_draws = 600,
    scaling = 700,
    decomp_target = 800,
    decomp_dirs = 900,
    decomp_points = 1000,
    anti_target = 1100,
    anti_dirs = 1200,
    anti_trials = 1300,
    anti_fit = 1400,
    path_setup = 1500,
};

std::uint64_t stream(const Options& o, Stream family, std::uint64_t index) {
    return stream_seed(o.seed, static_cast<std::uint64_t>(family) * 100000 + index);
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// |got - expect| / |expect|; an exact zero must be matched exactly.
double rel_dev(double got, double expect) {
    if (expect == 0.0) return got == 0.0 ? 0.0 : kInf;
    return std::abs(got - expect) / std::abs(expect);
}

double max_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, x); // NaN never wins; flagged separately below
    for (double x : v)
        if (std::isnan(x)) return kInf;
    return m;
}

/// Worst rel_dev of value(pi X) against sign(pi) value(X) over random X and pi.
template <typename F>
double permutation_trials(std::size_t n, std::size_t d, std::size_t trials, std::uint64_t seed, std::size_t threads,
                          F&& value) {
    std::vector<double> dev(trials, 0.0);
    parallel_for(trials, threads, [&](std::size_t t) {
        Rng rng = make_rng(seed, t);
        const Configuration x = random_configuration(n, d, rng);
        const auto perm = random_permutation(n, rng);
        dev[t] = rel_dev(value(x.permuted(perm)), permutation_sign(perm) * value(x));
    });
    return max_of(dev);
}

// ---------------------------------------------------------------------------
// 1 & 2: support sweep

struct SweepRow {
    std::size_t n, d;
    std::size_t k;
    SupportReport report;
};

constexpr std::array<std::pair<std::size_t, std::size_t>, 4> kSupportShapes{{{2, 1}, {2, 3}, {4, 2}, {6, 3}}};
constexpr std::size_t kSupportTrials = 100000;

std::vector<SweepRow> support_sweep(const Options& o) {
    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < kSupportShapes.size(); ++i) {
        const auto [n, d] = kSupportShapes[i];
        const DirectionSet ys = sample_directions(n, d, std::nullopt, stream(o, support_dirs, i));
        SupportCheckOptions opt;
        opt.threads = o.threads;
        rows.push_back({n, d, ys.k_count(),
                        monte_carlo_support_check(ys, n, kSupportTrials, 1e-3, stream(o, support_trials, i), opt)});
    }
    return rows;
}

CriterionResult criterion_support(const std::vector<SweepRow>& rows, double elapsed) {
    CriterionResult r{1, "support set: max_k |f_k| >= K^-1/2 with K = dN+1"};
    std::size_t failures = 0, trials = 0;
    double min_margin = kInf;
    json shapes = json::array();
    for (const auto& row : rows) {
        failures += row.report.failures;
        trials += row.report.trials;
        min_margin = std::min(min_margin, row.report.min_max_basis - row.report.floor);
        shapes.push_back({{"n", row.n},
                          {"d", row.d},
                          {"k", row.k},
                          {"trials", row.report.trials},
                          {"failures", row.report.failures},
                          {"min_max_basis", row.report.min_max_basis},
                          {"floor", row.report.floor}});
    }
    r.metrics["trials"] = trials;
    r.metrics["failures"] = failures;
    r.metrics["min_margin_over_floor"] = min_margin;
    r.metrics["shapes"] = shapes;
    r.timing["seconds"] = elapsed;
    r.timing["budget_seconds"] = 120.0;
    r.passed = failures == 0 && elapsed <= 120.0;
    return r;
}

CriterionResult criterion_normalization(const std::vector<SweepRow>& rows) {
    CriterionResult r{2, "normalization: sum f_k^2 = 1 within 1e-12 and |f_k| <= 1"};
    double norm_err = 0.0, max_abs = 0.0;
    for (const auto& row : rows) {
        norm_err = std::max(norm_err, row.report.max_normalization_error);
        max_abs = std::max(max_abs, row.report.max_abs_basis);
    }
    r.metrics["configurations"] = rows.size() * kSupportTrials;
    r.metrics["max_normalization_error"] = norm_err;
    r.metrics["max_abs_basis"] = max_abs;
    r.passed = norm_err <= 1e-12 && max_abs <= 1.0;
    return r;
}

// ---------------------------------------------------------------------------
// 3: exact reconstruction

CriterionResult criterion_reconstruction(const Options& o) {
    CriterionResult r{3, "exact reconstruction reproduces bundled targets within 1e-10"};
    const auto t0 = Clock::now();
    constexpr std::size_t kPoints = 10000;
    double worst = 0.0;
    json worst_at;
    std::size_t targets = 0;
    for (TargetKind kind : kKinds) {
        for (std::size_t n = 2; n <= 6; ++n) {
            for (std::size_t d = 1; d <= 3; ++d, ++targets) {
                const TargetOracle t = bundled_target(kind, n, d, stream(o, recon_target, targets));
                const DirectionSet ys = sample_directions(n, d, std::nullopt, stream(o, recon_dirs, targets));
                const AnsatzModel model = exact_reconstruction(t, ys);
                std::vector<double> dev(kPoints);
                const std::uint64_t pts = stream(o, recon_points, targets);
                parallel_for(kPoints, o.threads, [&](std::size_t i) {
                    Rng rng = make_rng(pts, i);
                    const Configuration x = random_configuration(n, d, rng);
                    dev[i] = rel_dev(evaluate_ansatz(model, x), t(x));
                });
                const double m = max_of(dev);
                if (m > worst || worst_at.is_null()) {
                    worst = std::max(worst, m);
                    worst_at = {{"kind", to_string(kind)}, {"n", n}, {"d", d}};
                }
            }
        }
    }
    const double elapsed = seconds_since(t0);
    r.metrics["targets"] = targets;
    r.metrics["points_per_target"] = kPoints;
    r.metrics["max_rel_error"] = worst;
    r.metrics["worst_target"] = worst_at;
    r.timing["seconds"] = elapsed;
    r.timing["budget_seconds"] = 300.0;
    r.passed = worst <= 1e-10 && elapsed <= 300.0;
    return r;
}

// ---------------------------------------------------------------------------
// 4: determinant decomposition

constexpr std::array<std::pair<std::size_t, std::size_t>, 5> kDecompShapes{{{2, 2}, {3, 3}, {4, 2}, {5, 1}, {6, 2}}};

CriterionResult criterion_decomposition(const Options& o) {
    CriterionResult r{4, "sum_k det Phi^k = Psi within 1e-8; det Phi^k = f_k^2 Psi within 1e-10"};
    const auto t0 = Clock::now();
    constexpr std::size_t kPoints = 1000;
    double worst_sum = 0.0, worst_det = 0.0;
    json per_shape = json::array();
    std::size_t idx = 0;
    for (const auto& [n, d] : kDecompShapes) {
        double shape_sum = 0.0, shape_det = 0.0;
        for (TargetKind kind : kKinds) {
            const TargetOracle t = bundled_target(kind, n, d, stream(o, decomp_target, idx));
            const DirectionSet ys = sample_directions(n, d, std::nullopt, stream(o, decomp_dirs, idx));
            const std::uint64_t pts = stream(o, decomp_points, idx);
            ++idx;
            std::vector<double> sum_dev(kPoints), det_dev(kPoints);
            parallel_for(kPoints, o.threads, [&](std::size_t i) {
                Rng rng = make_rng(pts, i);
                const Configuration x = random_configuration(n, d, rng);
                const DecompositionResult res = decompose(t, ys, x, 1);
                sum_dev[i] = rel_dev(res.total, res.target_value);
                double w = 0.0;
                for (std::size_t k = 0; k < ys.k_count(); ++k)
                    w = std::max(w, rel_dev(res.per_determinant[k], phi_k(t, ys, k, x)));
                det_dev[i] = w;
            });
            shape_sum = std::max(shape_sum, max_of(sum_dev));
            shape_det = std::max(shape_det, max_of(det_dev));
        }
        per_shape.push_back({{"n", n}, {"d", d}, {"max_sum_rel_error", shape_sum}, {"max_det_rel_error", shape_det}});
        worst_sum = std::max(worst_sum, shape_sum);
        worst_det = std::max(worst_det, shape_det);
    }
    r.metrics["points_per_target"] = kPoints;
    r.metrics["max_sum_rel_error"] = worst_sum;
    r.metrics["max_det_rel_error"] = worst_det;
    r.metrics["shapes"] = per_shape;
    r.timing["seconds"] = seconds_since(t0);
    r.passed = worst_sum <= 1e-8 && worst_det <= 1e-10;
    return r;
}

// ---------------------------------------------------------------------------
// 5: antisymmetry

constexpr std::array<std::pair<std::size_t, std::size_t>, 6> kAntiShapes{
    {{2, 1}, {2, 3}, {3, 2}, {4, 3}, {5, 1}, {6, 2}}};

CriterionResult criterion_antisymmetry(const Options& o) {
    CriterionResult r{5, "value(pi X) = sign(pi) value(X) within 1e-10 for every component"};
    const auto t0 = Clock::now();
    constexpr std::size_t kTrials = 1000;
    double w_target = 0.0, w_recon = 0.0, w_fit = 0.0, w_tilde = 0.0, w_det = 0.0;
    std::size_t checks = 0, idx = 0;
    auto trial_seed = [&] { return stream(o, anti_trials, checks++); };

    for (std::size_t s = 0; s < kAntiShapes.size(); ++s) {
        const auto [n, d] = kAntiShapes[s];
        const DirectionSet ys = sample_directions(n, d, std::nullopt, stream(o, anti_dirs, s));

        for (std::size_t k = 0; k < ys.k_count(); ++k) {
            // f~_k in the log domain: signs must flip exactly, magnitudes agree.
            std::vector<double> dev(kTrials);
            const std::uint64_t seed = trial_seed();
            parallel_for(kTrials, o.threads, [&](std::size_t t) {
                Rng rng = make_rng(seed, t);
                const Configuration x = random_configuration(n, d, rng);
                const auto perm = random_permutation(n, rng);
                const LogSigned a = tilde_f(ys[k], x);
                const LogSigned b = tilde_f(ys[k], x.permuted(perm));
                if (a.is_zero() || b.is_zero())
                    dev[t] = (a.is_zero() && b.is_zero()) ? 0.0 : kInf;
                else if (b.sign != permutation_sign(perm) * a.sign)
                    dev[t] = kInf;
                else
                    dev[t] = std::expm1(std::abs(b.logmag - a.logmag));
            });
            w_tilde = std::max(w_tilde, max_of(dev));
        }

        for (TargetKind kind : kKinds) {
            const TargetOracle t = bundled_target(kind, n, d, stream(o, anti_target, idx++));
            w_target = std::max(w_target, permutation_trials(n, d, kTrials, trial_seed(), o.threads,
                                                             [&](const Configuration& x) { return t(x); }));
            const AnsatzModel model = exact_reconstruction(t, ys);
            w_recon = std::max(w_recon, permutation_trials(n, d, kTrials, trial_seed(), o.threads,
                                                           [&](const Configuration& x) { return evaluate_ansatz(model, x); }));
            for (std::size_t k = 0; k < ys.k_count(); ++k)
                w_det = std::max(w_det, permutation_trials(n, d, kTrials, trial_seed(), o.threads,
                                                           [&](const Configuration& x) {
                                                               return build_orbital_matrix(t, ys, k, x).sparse_determinant();
                                                           }));
        }

        // A fitted model: quadratic power-sum features on the bundled Slater target.
        const TargetOracle st = bundled_target(TargetKind::slater_closed_form, n, d, 0);
        const FeatureSpec spec{2, ys};
        FitOptions fopt;
        fopt.threads = o.threads;
        const std::size_t unknowns = fit_unknowns(ys, spec);
        const FitResult fr = fit(st, ys, spec, 2 * unknowns + 50, 100, 1e-8, stream(o, anti_fit, s), fopt);
        w_fit = std::max(w_fit, permutation_trials(n, d, kTrials, trial_seed(), o.threads,
                                                   [&](const Configuration& x) { return evaluate_ansatz(fr.model, x); }));
    }
    r.metrics["trials_per_check"] = kTrials;
    r.metrics["checks"] = checks;
    r.metrics["max_dev_targets"] = w_target;
    r.metrics["max_dev_reconstructed"] = w_recon;
    r.metrics["max_dev_fitted"] = w_fit;
    r.metrics["max_dev_tilde_f"] = w_tilde;
    r.metrics["max_dev_determinants"] = w_det;
    r.timing["seconds"] = seconds_since(t0);
    const double worst = std::max({w_target, w_recon, w_fit, w_tilde, w_det});
    r.metrics["max_dev"] = worst;
    r.passed = worst <= 1e-10;
    return r;
}

// ---------------------------------------------------------------------------
// 6: fast vs naive kernel

std::vector<double> gapped_draw(std::size_t n, double gap, Rng& rng) {
    std::normal_distribution<double> g;
    std::vector<double> s(n);
    for (auto& v : s) v = g(rng);
    // Redraw the later member of any close pair until every gap is wide enough.
    for (;;) {
        const SortParity sp = inversion_parity(s);
        bool ok = true;
        for (std::size_t i = 1; i < n; ++i) {
            if (s[sp.permutation[i]] - s[sp.permutation[i - 1]] < gap) {
                s[sp.permutation[i]] = g(rng);
                ok = false;
            }
        }
        if (ok) return s;
    }
}

CriterionResult criterion_kernel(const Options& o) {
    CriterionResult r{6, "fast product of differences matches the naive oracle (N = 2..1024)"};
    const auto t0 = Clock::now();
    constexpr std::size_t kMaxN = 1024, kDraws = 100;
    const std::size_t sizes = kMaxN - 1;
    std::vector<std::size_t> mismatches(sizes, 0);
    std::vector<double> worst(sizes, 0.0);
    const std::uint64_t seed = stream(o, kernel_draws, 0);
    // Largest N first so the static chunks of parallel_for stay balanced-ish.
    parallel_for(sizes, o.threads, [&](std::size_t slot) {
        const std::size_t n = kMaxN - slot;
        for (std::size_t rep = 0; rep < kDraws; ++rep) {
            Rng rng = make_rng(seed, n * kDraws + rep);
            const auto s = gapped_draw(n, 1e-6, rng);
            const LogSigned fast = product_of_differences_fast(s);
            const LogSigned naive = product_of_differences_naive(s);
            if (fast.sign != naive.sign) ++mismatches[slot];
            const double err = std::abs(fast.logmag - naive.logmag) / std::max(1.0, std::abs(naive.logmag));
            worst[slot] = std::max(worst[slot], std::isnan(err) ? kInf : err);
        }
    });
    std::size_t total_mismatch = 0;
    for (auto m : mismatches) total_mismatch += m;
    const double w = max_of(worst);
    r.metrics["sizes"] = sizes;
    r.metrics["draws_per_size"] = kDraws;
    r.metrics["sign_mismatches"] = total_mismatch;
    r.metrics["max_rel_logmag_error"] = w;
    r.timing["seconds"] = seconds_since(t0);
    r.passed = total_mismatch == 0 && w <= 1e-8;
    return r;
}

// ---------------------------------------------------------------------------
// 7: scaling

/// Minimum wall time of `body` over repeats, stopping after `budget` seconds.
template <typename F>
double min_time(F&& body, std::size_t min_reps, double budget) {
    double best = kInf, spent = 0.0;
    for (std::size_t rep = 0; rep < min_reps || spent < budget; ++rep) {
        const auto t0 = Clock::now();
        body();
        const double dt = seconds_since(t0);
        best = std::min(best, dt);
        spent += dt;
        if (rep + 1 >= min_reps && spent >= budget) break;
    }
    return best;
}

CriterionResult criterion_scaling(const Options& o) {
    CriterionResult r{7, "basis evaluation exponent <= 2.4 (fast), naive kernel exponent >= 1.8"};
    const auto t0 = Clock::now();
    constexpr std::size_t d = 3;
    const std::vector<std::size_t> sizes{256, 512, 1024, 2048};
    std::vector<double> ns;
    std::vector<double> fast_t(sizes.size(), kInf), naive_t(sizes.size(), kInf);
    double agreement = 0.0;
    std::size_t sign_mismatch = 0;
    struct Case {
        Configuration x;
        DirectionSet ys;
        std::vector<double> s0;
    };
    std::vector<Case> cases;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const std::size_t n = sizes[i];
        Rng rng = make_rng(stream(o, scaling, i));
        Configuration x = random_configuration(n, d, rng);
        DirectionSet ys = sample_directions(n, d, std::nullopt, stream(o, scaling, 100 + i));
        // Equivalence piggybacked on the bench: a handful of directions per size.
        for (std::size_t k = 0; k < 8; ++k) {
            const auto s = project(ys[k], x);
            const LogSigned a = product_of_differences(s);
            const LogSigned b = product_of_differences_naive(s);
            if (a.sign != b.sign) ++sign_mismatch;
            agreement = std::max(agreement, std::abs(a.logmag - b.logmag) / std::max(1.0, std::abs(b.logmag)));
        }
        auto s0 = project(ys[0], x);
        cases.push_back({std::move(x), std::move(ys), std::move(s0)});
        ns.push_back(static_cast<double>(n));
    }
    // Sizes are interleaved over rounds so drift in machine speed hits all of
    // them alike. A naive sample batches calls to ~the pair count of N = 2048,
    // so short kernels are not dominated by timer and scheduler noise.
    volatile double sink = 0.0;
    constexpr std::size_t kRounds = 5;
    for (std::size_t round = 0; round < kRounds; ++round) {
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            const Case& c = cases[i];
            const double tf = min_time([&] { sink = sink + evaluate_basis(c.ys, c.x).log_norm; }, 1, 0.0);
            fast_t[i] = std::min(fast_t[i], tf);
            const std::size_t ratio = sizes.back() / sizes[i];
            const std::size_t batch = 4 * ratio * ratio;
            const double tn = min_time(
                [&] {
                    for (std::size_t b = 0; b < batch; ++b) sink = sink + product_of_differences_naive(c.s0).logmag;
                },
                3, 0.0);
            naive_t[i] = std::min(naive_t[i], tn / static_cast<double>(batch));
        }
    }
    const double fast_slope = loglog_slope(ns, fast_t);
    const double naive_slope = loglog_slope(ns, naive_t);
    r.metrics["sizes"] = sizes;
    r.metrics["d"] = d;
    r.metrics["fast_naive_sign_mismatches"] = sign_mismatch;
    r.metrics["fast_naive_max_rel_error"] = agreement;
    r.timing["fast_basis_seconds"] = fast_t;
    r.timing["naive_kernel_seconds"] = naive_t;
    r.timing["fast_slope"] = fast_slope;
    r.timing["naive_slope"] = naive_slope;
    r.timing["seconds"] = seconds_since(t0);
    r.passed = fast_slope <= 2.4 && naive_slope >= 1.8 && sign_mismatch == 0 && agreement <= 1e-8;
    return r;
}

// ---------------------------------------------------------------------------
// 8: continuity at the coincidence set

struct PathShape {
    std::size_t n, d;
    TargetKind kind;
};

CriterionResult criterion_continuity(const Options& o) {
    CriterionResult r{8, "|phi| and orbital entries fall below 1e-6 approaching X_1 = X_2, and are 0 there"};
    const auto t0 = Clock::now();
    constexpr std::size_t kPaths = 32;
    constexpr double kFloor = 1e-6;
    std::vector<PathShape> shapes;
    for (std::size_t p = 0; p < kPaths; ++p)
        shapes.push_back({2 + p % 5, 1 + (p / 5) % 3, kKinds[p % kKinds.size()]});

    std::vector<double> phi_min(kPaths), orb_min(kPaths), at_zero(kPaths), steps(kPaths);
    parallel_for(kPaths, o.threads, [&](std::size_t p) {
        const auto [n, d, kind] = shapes[p];
        const std::uint64_t seed = stream(o, path_setup, p);
        Rng rng = make_rng(seed);
        const TargetOracle t = bundled_target(kind, n, d, seed);
        const DirectionSet ys = sample_directions(n, d, std::nullopt, seed);
        const AnsatzModel model = exact_reconstruction(t, ys);
        const Configuration start = random_configuration(n, d, rng);

        // X_1(u) = X_2 + u (X_1 - X_2); u = 0 is exactly the coincidence point.
        auto at = [&](double u) {
            Configuration x = start;
            for (std::size_t l = 0; l < d; ++l) x(0, l) = start(1, l) + u * (start(0, l) - start(1, l));
            return x;
        };
        auto orbital_max = [&](const Configuration& x) {
            double m = 0.0;
            for (std::size_t k = 0; k < ys.k_count(); ++k)
                for (double e : build_orbital_matrix(t, ys, k, x).entries) m = std::max(m, std::abs(e));
            return m;
        };

        // u = 2^-j until X_1 rounds onto X_2.
        double best_phi = kInf, best_orb = kInf;
        std::size_t j = 1;
        for (; j <= 1100; ++j) {
            const Configuration x = at(std::ldexp(1.0, -static_cast<int>(j)));
            if (is_coincident(x, 0.0)) break;
            best_phi = std::min(best_phi, std::abs(evaluate_ansatz(model, x)));
            best_orb = std::min(best_orb, orbital_max(x));
        }
        const Configuration end = at(0.0);
        double zero = std::abs(evaluate_ansatz(model, end));
        zero = std::max(zero, orbital_max(end));
        phi_min[p] = best_phi;
        orb_min[p] = best_orb;
        at_zero[p] = zero;
        steps[p] = static_cast<double>(j - 1);
    });

    json per_path = json::array();
    std::size_t phi_fail = 0, orb_fail = 0, zero_fail = 0;
    for (std::size_t p = 0; p < kPaths; ++p) {
        phi_fail += phi_min[p] < kFloor ? 0 : 1;
        orb_fail += orb_min[p] < kFloor ? 0 : 1;
        zero_fail += at_zero[p] == 0.0 ? 0 : 1;
        per_path.push_back({{"n", shapes[p].n},
                            {"d", shapes[p].d},
                            {"kind", to_string(shapes[p].kind)},
                            {"closest_phi", phi_min[p]},
                            {"closest_orbital_max", orb_min[p]},
                            {"value_at_coincidence", at_zero[p]},
                            {"steps", steps[p]}});
    }
    r.metrics["paths"] = kPaths;
    r.metrics["phi_above_floor"] = phi_fail;
    r.metrics["orbital_above_floor"] = orb_fail;
    r.metrics["nonzero_at_coincidence"] = zero_fail;
    r.metrics["worst_closest_phi"] = max_of(phi_min);
    r.metrics["worst_closest_orbital_max"] = max_of(orb_min);
    r.metrics["per_path"] = per_path;
    r.timing["seconds"] = seconds_since(t0);
    r.passed = phi_fail == 0 && orb_fail == 0 && zero_fail == 0;
    return r;
}

std::vector<CriterionResult> run_one_through_eight(const Options& o) {
    std::vector<CriterionResult> out;
    const auto t0 = Clock::now();
    const auto rows = support_sweep(o);
    out.push_back(criterion_support(rows, seconds_since(t0)));
    out.push_back(criterion_normalization(rows));
    for (int id = 3; id <= 8; ++id) out.push_back(run_criterion(id, o));
    return out;
}

json strip_value(json j) {
    if (j.is_object()) {
        j.erase("timing");
        for (auto& [key, v] : j.items()) v = strip_value(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = strip_value(v);
    }
    return j;
}

std::string compact(const json& v) {
    if (v.is_number_float()) {
        std::ostringstream os;
        os << std::setprecision(3) << v.get<double>();
        return os.str();
    }
    return v.dump();
}

} // namespace

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need >= 2 paired samples");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(y.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

CriterionResult run_criterion(int id, const Options& o) {
    switch (id) {
    case 1: {
        const auto t0 = Clock::now();
        const auto rows = support_sweep(o);
        return criterion_support(rows, seconds_since(t0));
    }
    case 2: return criterion_normalization(support_sweep(o));
    case 3: return criterion_reconstruction(o);
    case 4: return criterion_decomposition(o);
    case 5: return criterion_antisymmetry(o);
    case 6: return criterion_kernel(o);
    case 7: return criterion_scaling(o);
    case 8: return criterion_continuity(o);
    default: break;
    }
    throw std::invalid_argument("run_criterion: id must be in 1..8");
}

json strip_timing(json j) { return strip_value(std::move(j)); }

bool same_numbers(const json& a, const json& b) { return strip_timing(a) == strip_timing(b); }

std::vector<CriterionResult> run_suite(const Options& o) {
    const auto t0 = Clock::now();
    std::vector<CriterionResult> first = run_one_through_eight(o);

    Options other = o;
    other.threads = resolve_threads(o.threads) == 1 ? 3 : 1;
    const std::vector<CriterionResult> second = run_one_through_eight(other);

    const json a = to_json(first, o), b = to_json(second, o);
    CriterionResult r{9, "determinism: identical numeric report across reruns and thread counts"};
    std::size_t differing = 0;
    json which = json::array();
    for (std::size_t i = 0; i < first.size(); ++i) {
        if (!same_numbers(a["criteria"][i], b["criteria"][i])) {
            ++differing;
            which.push_back(first[i].id);
        }
    }
    r.metrics["threads"] = {resolve_threads(o.threads), resolve_threads(other.threads)};
    r.metrics["criteria_compared"] = first.size();
    r.metrics["criteria_differing"] = differing;
    r.metrics["differing_ids"] = which;
    r.timing["seconds"] = seconds_since(t0);
    r.passed = differing == 0;
    first.push_back(std::move(r));
    return first;
}

json to_json(const std::vector<CriterionResult>& results, const Options& o) {
    json out;
    out["seed"] = o.seed;
    json arr = json::array();
    bool all = true;
    for (const auto& c : results) {
        arr.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"metrics", c.metrics}, {"timing", c.timing}});
        all = all && c.passed;
    }
    out["criteria"] = arr;
    out["all_passed"] = all;
    return out;
}

std::string format_table(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    for (const auto& c : results) {
        os << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.title;
        std::string sep = "  | ";
        for (const auto& [key, v] : c.metrics.items()) {
            if (v.is_structured()) continue;
            os << sep << key << '=' << compact(v);
            sep = " ";
        }
        if (c.timing.contains("seconds")) os << " t=" << compact(c.timing["seconds"]) << 's';
        if (c.timing.contains("fast_slope"))
            os << " fast_slope=" << compact(c.timing["fast_slope"]) << " naive_slope=" << compact(c.timing["naive_slope"]);
        os << '\n';
    }
    return os.str();
}

} // namespace antisym::acceptance
