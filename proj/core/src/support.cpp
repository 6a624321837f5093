// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/support.hpp>

#include <antisym/parallel.hpp>
#include <antisym/random.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace antisym {

namespace {

constexpr double kFloorSlack = 1e-9;

struct TrialOutcome {
    bool failed = false;
    double max_basis = 0.0;
    double norm_error = 0.0;
    double log_norm = 0.0;
};

TrialOutcome check_one(const DirectionSet& ys, const Configuration& x, double floor, const KernelOptions& kernel) {
    const BasisEvaluation be = evaluate_basis(ys, x, kernel);
    TrialOutcome out;
    out.max_basis = be.max_abs_normalized();
    out.log_norm = be.log_norm;
    double sq = 0.0;
    for (double v : be.normalized) sq += v * v;
    out.norm_error = std::abs(sq - 1.0);
    out.failed = be.on_omega || be.denominator_vanished || out.max_basis < floor - kFloorSlack;
    return out;
}

void absorb(SupportReport& report, const TrialOutcome& t) {
    report.failures += t.failed ? 1 : 0;
    report.min_max_basis = std::min(report.min_max_basis, t.max_basis);
    report.max_abs_basis = std::max(report.max_abs_basis, t.max_basis);
    report.max_normalization_error = std::max(report.max_normalization_error, t.norm_error);
    report.min_log_norm = std::min(report.min_log_norm, t.log_norm);
}

// Shifts to zero mean and scales so the largest |coordinate| is 1.
void normalize_spread(std::vector<double>& v, std::size_t n, std::size_t d) {
    for (std::size_t l = 0; l < d; ++l) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += v[i * d + l];
        mean /= static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) v[i * d + l] -= mean;
    }
    double spread = 0.0;
    for (double c : v) spread = std::max(spread, std::abs(c));
    if (spread > 0.0)
        for (double& c : v) c /= spread;
}

class NelderMead {
public:
    template <typename F>
    static void minimize(std::vector<double> start, double step, std::size_t max_evals, F&& f) {
        const std::size_t dim = start.size();
        std::vector<std::vector<double>> simplex(dim + 1, start);
        for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += step;
        std::vector<double> values(dim + 1);
        std::size_t evals = 0;
        for (std::size_t i = 0; i <= dim; ++i) values[i] = f(simplex[i]), ++evals;

        std::vector<std::size_t> order(dim + 1);
        std::vector<double> centroid(dim), trial(dim), trial2(dim);
        while (evals < max_evals) {
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
            const std::size_t best = order.front(), worst = order.back(), second = order[dim - 1];
            if (std::abs(values[worst] - values[best]) < 1e-12 * (1.0 + std::abs(values[best]))) break;

            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t i = 0; i <= dim; ++i)
                if (i != worst)
                    for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i][j] / static_cast<double>(dim);

            auto blend = [&](double t, std::vector<double>& out) {
                for (std::size_t j = 0; j < dim; ++j) out[j] = centroid[j] + t * (simplex[worst][j] - centroid[j]);
            };
            blend(-1.0, trial);
            const double fr = f(trial);
            ++evals;
            if (fr < values[best]) {
                blend(-2.0, trial2);
                const double fe = f(trial2);
                ++evals;
                if (fe < fr) simplex[worst] = trial2, values[worst] = fe;
                else simplex[worst] = trial, values[worst] = fr;
            } else if (fr < values[second]) {
                simplex[worst] = trial, values[worst] = fr;
            } else {
                blend(fr < values[worst] ? -0.5 : 0.5, trial2);
                const double fc = f(trial2);
                ++evals;
                if (fc < std::min(fr, values[worst])) {
                    simplex[worst] = trial2, values[worst] = fc;
                } else {
                    for (std::size_t i = 0; i <= dim; ++i) {
                        if (i == best) continue;
                        for (std::size_t j = 0; j < dim; ++j)
                            simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
                        values[i] = f(simplex[i]);
                        ++evals;
                    }
                }
            }
        }
    }
};

} // namespace

std::string SupportReport::to_json() const {
    nlohmann::ordered_json j;
    j["trials"] = trials;
    j["failures"] = failures;
    j["min_max_basis"] = min_max_basis;
    j["seed"] = seed;
    return j.dump();
}

SupportReport monte_carlo_support_check(const DirectionSet& ys, std::size_t n, std::size_t trials, double separation,
                                        std::uint64_t seed, const SupportCheckOptions& options) {
    if (trials < 1) throw std::invalid_argument("monte_carlo_support_check: trials must be >= 1");
    if (!(separation > 0.0)) throw std::invalid_argument("monte_carlo_support_check: separation must be > 0");

    const double floor = 1.0 / std::sqrt(static_cast<double>(ys.k_count()));
    std::vector<TrialOutcome> outcomes(trials);
    parallel_for(trials, options.threads, [&](std::size_t t) {
        Rng rng = make_rng(seed, t);
        const Configuration x = random_separated_configuration(n, ys.d(), separation, rng);
        outcomes[t] = check_one(ys, x, floor, options.kernel);
    });
    for (const auto& x : options.planted) outcomes.push_back(check_one(ys, x, floor, options.kernel));

    SupportReport report;
    report.seed = seed;
    report.floor = floor;
    report.trials = outcomes.size();
    report.evaluations = outcomes.size();
    for (const auto& o : outcomes) absorb(report, o);
    return report;
}

SupportReport adversarial_support_search(const DirectionSet& ys, std::size_t n, double separation,
                                         std::size_t restarts, std::uint64_t seed, const AdversarialOptions& options) {
    if (!(separation > 0.0)) throw std::invalid_argument("adversarial_support_search: separation must be > 0");
    if (restarts < 1) throw std::invalid_argument("adversarial_support_search: restarts must be >= 1");

    const std::size_t d = ys.d();
    const std::size_t dim = n * d;
    const std::size_t budget = options.max_evaluations ? options.max_evaluations : 400 * dim;
    const double floor = 1.0 / std::sqrt(static_cast<double>(ys.k_count()));

    std::vector<SupportReport> partial(restarts);
    parallel_for(restarts, options.threads, [&](std::size_t r) {
        SupportReport& local = partial[r];
        Rng rng = make_rng(seed, r);
        std::vector<double> start = random_configuration(n, d, rng).data();
        normalize_spread(start, n, d);

        auto objective = [&](const std::vector<double>& v) {
            std::vector<double> c = v;
            normalize_spread(c, n, d);
            const Configuration x(n, d, std::move(c));
            const double gap = min_pair_distance(x);
            ++local.evaluations;
            if (gap < separation) return 1e3 * (1.0 + (separation - gap) / separation);
            const TrialOutcome t = check_one(ys, x, floor, options.kernel);
            absorb(local, t);
            // Drive the search toward small sum of squares; -inf (a counterexample) is final.
            return std::isfinite(t.log_norm) ? 2.0 * t.log_norm : -1e300;
        };
        NelderMead::minimize(std::move(start), 0.25, budget, objective);
    });

    SupportReport report;
    report.seed = seed;
    report.floor = floor;
    report.trials = restarts;
    for (const auto& p : partial) {
        report.failures += p.failures;
        report.evaluations += p.evaluations;
        report.min_max_basis = std::min(report.min_max_basis, p.min_max_basis);
        report.max_abs_basis = std::max(report.max_abs_basis, p.max_abs_basis);
        report.max_normalization_error = std::max(report.max_normalization_error, p.max_normalization_error);
        report.min_log_norm = std::min(report.min_log_norm, p.min_log_norm);
    }
    return report;
}

std::optional<Configuration> plant_orthogonal_configuration(const DirectionSet& ys, std::size_t n,
                                                            double separation) {
    const std::size_t d = ys.d();
    std::vector<std::vector<double>> candidates;

    // Coordinate-pair rotations of the first direction: y.v = -y_l y_m + y_m y_l
    // vanishes exactly in floating point.
    const auto y0 = ys[0];
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = l + 1; m < d; ++m) {
            std::vector<double> v(d, 0.0);
            v[l] = -y0[m];
            v[m] = y0[l];
            candidates.push_back(std::move(v));
        }

    // Gram-Schmidt complement of the span of all directions.
    std::vector<std::vector<double>> basis;
    auto orthogonalize = [&](std::vector<double> v) -> std::optional<std::vector<double>> {
        for (const auto& b : basis) {
            double dot = 0.0;
            for (std::size_t l = 0; l < d; ++l) dot += v[l] * b[l];
            for (std::size_t l = 0; l < d; ++l) v[l] -= dot * b[l];
        }
        double sq = 0.0;
        for (double c : v) sq += c * c;
        if (sq < 1e-20) return std::nullopt;
        const double inv = 1.0 / std::sqrt(sq);
        for (double& c : v) c *= inv;
        return v;
    };
    for (std::size_t k = 0; k < ys.k_count(); ++k) {
        auto y = ys[k];
        if (auto b = orthogonalize({y.begin(), y.end()})) basis.push_back(*b);
    }
    for (std::size_t e = 0; e < d; ++e) {
        std::vector<double> unit(d, 0.0);
        unit[e] = 1.0;
        if (auto v = orthogonalize(unit)) candidates.push_back(*v);
    }

    for (const auto& v : candidates) {
        double norm = 0.0;
        for (double c : v) norm += c * c;
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        // Power-of-two scales keep every product y_l * (2^e v_l) exact.
        const double scale = std::exp2(std::ceil(std::log2(separation / norm)));
        std::vector<double> coords(n * d, 0.0);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t l = 0; l < d; ++l)
                coords[i * d + l] = std::ldexp(scale * v[l], static_cast<int>(i) - 1);
        Configuration x(n, d, std::move(coords));
        if (is_coincident(x, 0.0) || min_pair_distance(x) < separation) continue;
        bool all_zero = true;
        for (std::size_t k = 0; k < ys.k_count() && all_zero; ++k) all_zero = tilde_f(ys[k], x).is_zero();
        if (all_zero) return x;
    }
    return std::nullopt;
}

} // namespace antisym
