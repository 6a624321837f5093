// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

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

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace antisym::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Stream families; each command draws from its own so reports do not shift
// when another command changes.
enum Stream : std::uint64_t { directions = 1, configs = 2, antisym_probe = 3, features = 4, planted = 5, bench = 6 };

std::uint64_t seed_for(const RunConfig& c, Stream s) { return stream_seed(c.seed, s); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double rel_dev(double got, double expect) {
    if (expect == 0.0) return got == 0.0 ? 0.0 : kInf;
    return std::abs(got - expect) / std::abs(expect);
}

/// NaN counts as the worst value.
double worst(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::isnan(x) ? kInf : std::max(m, x);
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t n_or(const RunConfig& c, std::size_t fallback) { return c.n.value_or(fallback); }
std::size_t d_or(const RunConfig& c, std::size_t fallback) { return c.d.value_or(fallback); }

void require_shape(std::size_t n, std::size_t d) {
    if (n < 2) throw UsageError("n must be at least 2");
    if (d < 1) throw UsageError("d must be at least 1");
}

/// --target: inline JSON, a spec file, or a bundled kind name.
TargetOracle resolve_target(const RunConfig& c) {
    if (c.target.empty()) throw UsageError(c.command + " needs --target");
    std::string text;
    if (c.target.front() == '{') {
        text = c.target;
    } else if (std::filesystem::is_regular_file(c.target)) {
        text = read_file(c.target);
    } else {
        TargetKind kind;
        try {
            kind = target_kind_from_string(c.target);
        } catch (const std::invalid_argument&) {
            throw UsageError("--target '" + c.target + "' is neither a file, a JSON spec nor a target kind");
        }
        if (kind == TargetKind::custom) throw UsageError("custom targets cannot be named on the command line");
        const std::size_t n = n_or(c, 3), d = d_or(c, 2);
        require_shape(n, d);
        if (kind == TargetKind::brute_force && n > 8) throw UsageError("brute-force targets need n <= 8");
        return bundled_target(kind, n, d, c.seed);
    }
    TargetOracle t = [&] {
        try {
            return target_from_json(text);
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad target spec: ") + e.what());
        }
    }();
    if ((c.n && *c.n != t.n()) || (c.d && *c.d != t.d()))
        throw UsageError("--n/--d disagree with the target spec");
    return t;
}

DirectionSet directions_for(const RunConfig& c, std::size_t n, std::size_t d) {
    if (c.k && *c.k == 0) throw UsageError("k must be positive");
    return sample_directions(n, d, c.k, seed_for(c, directions));
}

Json config_json(const RunConfig& c, std::size_t n, std::size_t d, std::size_t k) {
    Json j;
    j["n"] = n;
    j["d"] = d;
    j["k"] = k;
    j["seed"] = c.seed;
    j["separation"] = c.separation;
    return j;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, os);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), os);
    } else {
        os << prefix << ',' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

void emit_text(const RunConfig& c, const std::string& text) {
    if (c.out.empty() || c.out == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(c.out);
    if (!out) throw UsageError("cannot write " + c.out);
    out << text;
}

/// JSON is written whole; CSV flattens nested keys as dotted "key,value" rows.
void emit(const RunConfig& c, const Json& report) {
    if (c.format == "csv") {
        std::ostringstream os;
        os << "key,value\n";
        flatten(report, "", os);
        emit_text(c, os.str());
    } else {
        emit_text(c, report.dump(2) + "\n");
    }
}

std::vector<Configuration> sample_configs(const RunConfig& c, std::size_t n, std::size_t d, std::size_t count) {
    std::vector<Configuration> xs;
    xs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng = make_rng(seed_for(c, configs), i);
        xs.push_back(random_separated_configuration(n, d, c.separation, rng));
    }
    return xs;
}

void check_common(const RunConfig& c) {
    if (!(c.separation > 0.0) || !std::isfinite(c.separation)) throw UsageError("separation must be positive");
    if (c.trials && *c.trials == 0) throw UsageError("trials must be positive");
}

} // namespace

int cmd_verify_support(const RunConfig& c) {
    check_common(c);
    const std::size_t n = n_or(c, 3), d = d_or(c, 3);
    require_shape(n, d);
    const DirectionSet ys = directions_for(c, n, d);
    const std::size_t trials = c.trials.value_or(10000);

    SupportCheckOptions mc_opts;
    mc_opts.threads = c.threads;
    bool planted_ok = false;
    if (c.plant) {
        if (auto p = plant_orthogonal_configuration(ys, n, c.separation)) {
            mc_opts.planted.push_back(std::move(*p));
            planted_ok = true;
        }
    }
    const auto t0 = Clock::now();
    const SupportReport mc = monte_carlo_support_check(ys, n, trials, c.separation, c.seed, mc_opts);
    const double mc_seconds = seconds_since(t0);

    SupportReport adv;
    double adv_seconds = 0.0;
    if (c.restarts > 0) {
        AdversarialOptions adv_opts;
        adv_opts.threads = c.threads;
        const auto t1 = Clock::now();
        adv = adversarial_support_search(ys, n, c.separation, c.restarts, c.seed, adv_opts);
        adv_seconds = seconds_since(t1);
    }

    const std::size_t failures = mc.failures + adv.failures;
    Json r;
    r["command"] = "verify-support";
    r["config"] = config_json(c, n, d, ys.k_count());
    r["config"]["trials"] = trials;
    r["config"]["restarts"] = c.restarts;
    r["config"]["plant"] = c.plant;
    r["floor"] = mc.floor;
    r["monte_carlo"] = Json::parse(mc.to_json());
    r["monte_carlo"]["max_normalization_error"] = mc.max_normalization_error;
    r["planted_configurations"] = planted_ok ? 1 : 0;
    if (c.restarts > 0) r["adversarial"] = Json::parse(adv.to_json());
    r["failures"] = failures;
    r["min_max_basis"] = c.restarts > 0 ? std::min(mc.min_max_basis, adv.min_max_basis) : mc.min_max_basis;
    r["passed"] = failures == 0;
    r["timing"] = {{"monte_carlo_seconds", mc_seconds}, {"adversarial_seconds", adv_seconds}};
    emit(c, r);
    return failures == 0 ? pass : verification_failed;
}

int cmd_decompose(const RunConfig& c) {
    check_common(c);
    const TargetOracle target = resolve_target(c);
    const std::size_t n = target.n(), d = target.d();
    const DirectionSet ys = directions_for(c, n, d);
    const std::size_t trials = c.trials.value_or(100);
    const auto xs = sample_configs(c, n, d, trials);

    const auto t0 = Clock::now();
    std::vector<double> residual(trials), ratio(trials);
    parallel_for(trials, c.threads, [&](std::size_t i) {
        const DecompositionResult res = decompose(target, ys, xs[i], 1);
        residual[i] = res.residual;
        ratio[i] = rel_dev(res.total, res.target_value);
    });
    const double seconds = seconds_since(t0);

    if (c.dump) {
        const std::string& path = *c.dump;
        if (path.empty() || path == "-") {
            write_decomposition(target, ys, xs.front(), std::cout);
        } else {
            std::ofstream out(path);
            if (!out) throw UsageError("cannot write " + path);
            write_decomposition(target, ys, xs.front(), out);
        }
    }

    const double max_residual = worst(residual);
    Json r;
    r["command"] = "decompose";
    r["config"] = config_json(c, n, d, ys.k_count());
    r["config"]["trials"] = trials;
    r["target"] = Json::parse(target.spec_json());
    r["determinants"] = ys.k_count();
    r["max_residual"] = max_residual;
    r["max_relative_error"] = worst(ratio);
    r["tolerance"] = 1e-8;
    r["passed"] = max_residual <= 1e-8;
    r["timing"] = {{"seconds", seconds}};
    emit(c, r);
    return max_residual <= 1e-8 ? pass : verification_failed;
}

int cmd_reconstruct(const RunConfig& c) {
    check_common(c);
    const TargetOracle target = resolve_target(c);
    const std::size_t n = target.n(), d = target.d();
    const DirectionSet ys = directions_for(c, n, d);
    const std::size_t trials = c.trials.value_or(1000);

    Json r;
    r["command"] = "reconstruct";
    r["config"] = config_json(c, n, d, ys.k_count());
    r["config"]["trials"] = trials;
    r["target"] = Json::parse(target.spec_json());

    AnsatzModel model;
    try {
        model = exact_reconstruction(target, ys);
    } catch (const NotAntisymmetricError& e) {
        r["error"] = e.what();
        r["passed"] = false;
        emit(c, r);
        return verification_failed;
    }

    const auto t0 = Clock::now();
    const auto xs = sample_configs(c, n, d, trials);
    std::vector<double> dev(trials);
    parallel_for(trials, c.threads, [&](std::size_t i) { dev[i] = rel_dev(evaluate_ansatz(model, xs[i]), target(xs[i])); });
    const double max_residual = worst(dev);
    const double antisym = antisymmetry_check(model, trials, seed_for(c, antisym_probe), c.threads);

    // Coincidence: copy particle 0 onto particle 1.
    Configuration on_omega = xs.front();
    for (std::size_t l = 0; l < d; ++l) on_omega(1, l) = on_omega(0, l);
    const double omega_value = evaluate_ansatz(model, on_omega);
    const double seconds = seconds_since(t0);

    const bool ok = max_residual <= 1e-10 && antisym <= 1e-10 && omega_value == 0.0;
    r["max_relative_residual"] = max_residual;
    r["antisymmetry_deviation"] = antisym;
    r["coincidence_value"] = omega_value;
    r["tolerance"] = 1e-10;
    r["passed"] = ok;
    r["timing"] = {{"seconds", seconds}};
    emit(c, r);
    return ok ? pass : verification_failed;
}

int cmd_fit(const RunConfig& c) {
    check_common(c);
    if (!(c.ridge >= 0.0) || !std::isfinite(c.ridge)) throw UsageError("ridge must be finite and non-negative");
    if (c.max_power == 0) throw UsageError("max-power must be positive");

    std::size_t n, d;
    std::optional<TargetOracle> target;
    const bool planted_target = c.target == "planted";
    if (planted_target) {
        n = n_or(c, 3);
        d = d_or(c, 2);
        require_shape(n, d);
    } else {
        target = resolve_target(c);
        n = target->n();
        d = target->d();
    }
    const DirectionSet ys = directions_for(c, n, d);
    auto spec = std::make_shared<FeatureSpec>(FeatureSpec{
        c.max_power, sample_directions(n, d, std::nullopt, seed_for(c, features)), c.pair_distances});
    if (planted_target) target = planted_representable_target(n, ys, *spec, seed_for(c, planted));

    FitOptions opts;
    opts.separation = c.separation;
    opts.threads = c.threads;

    Json r;
    r["command"] = "fit";
    r["config"] = config_json(c, n, d, ys.k_count());
    r["config"]["max_power"] = c.max_power;
    r["config"]["pair_distances"] = c.pair_distances;
    r["target"] = planted_target ? Json{{"kind", "planted"}, {"n", n}, {"d", d}} : Json::parse(target->spec_json());
    r["unknowns"] = fit_unknowns(ys, *spec);
    try {
        const FitResult res = fit(*target, ys, *spec, c.n_train, c.n_test, c.ridge, c.seed, opts);
        r["report"] = Json::parse(res.report.to_json());
        if (!c.model.empty()) {
            const std::string dir_file = c.model + ".directions";
            std::ofstream dirs(dir_file);
            std::ofstream model(c.model);
            if (!dirs || !model) throw UsageError("cannot write " + c.model);
            ys.write(dirs);
            write_model(res.model, std::filesystem::path(dir_file).filename().string(), model);
        }
    } catch (const SingularFitError& e) {
        r["error"] = e.what();
        emit(c, r);
        return verification_failed;
    }
    emit(c, r);
    return pass;
}

int cmd_bench(const RunConfig& c) {
    const std::size_t d = d_or(c, 3);
    if (d < 1) throw UsageError("d must be at least 1");
    if (c.sizes.empty()) throw UsageError("sizes must not be empty");
    for (std::size_t n : c.sizes)
        if (n < 2) throw UsageError("sizes must be at least 2");
    const std::size_t reps = std::max<std::size_t>(c.reps, 1);

    struct Row {
        std::size_t n, k;
        double fast, naive;
    };
    std::vector<Row> rows;
    double agreement = 0.0;
    std::size_t sign_mismatch = 0;
    const auto time_min = [&](auto&& body) {
        double best = kInf;
        for (std::size_t i = 0; i < reps; ++i) {
            const auto t0 = Clock::now();
            body();
            best = std::min(best, seconds_since(t0));
        }
        return best;
    };
    for (std::size_t i = 0; i < c.sizes.size(); ++i) {
        const std::size_t n = c.sizes[i];
        Rng rng = make_rng(seed_for(c, bench), i);
        const Configuration x = random_configuration(n, d, rng);
        const DirectionSet ys = sample_directions(n, d, c.k, stream_seed(seed_for(c, bench), 1000 + i));
        volatile double sink = 0.0;
        const double fast = time_min([&] { sink = sink + evaluate_basis(ys, x).log_norm; });
        const auto s0 = project(ys[0], x);
        const double naive = time_min([&] { sink = sink + product_of_differences_naive(s0).logmag; });
        for (std::size_t k = 0; k < std::min<std::size_t>(ys.k_count(), 4); ++k) {
            const auto s = project(ys[k], x);
            const LogSigned a = product_of_differences(s);
            const LogSigned b = product_of_differences_naive(s);
            if (a.sign != b.sign) ++sign_mismatch;
            agreement = std::max(agreement, std::abs(a.logmag - b.logmag) / std::max(1.0, std::abs(b.logmag)));
        }
        rows.push_back({n, ys.k_count(), fast, naive});
    }

    std::vector<double> ns, ft, nt;
    for (const Row& row : rows) {
        if (row.n < c.slope_min) continue;
        ns.push_back(static_cast<double>(row.n));
        ft.push_back(row.fast);
        nt.push_back(row.naive);
    }
    const bool have_slope = ns.size() >= 2;
    const double fast_slope = have_slope ? acceptance::loglog_slope(ns, ft) : std::nan("");
    const double naive_slope = have_slope ? acceptance::loglog_slope(ns, nt) : std::nan("");
    const bool agree = sign_mismatch == 0 && agreement <= 1e-8;

    if (c.format == "csv") {
        std::ostringstream os;
        os.precision(9);
        os << "N,d,K,seconds,path,scope\n";
        for (const Row& row : rows) {
            os << row.n << ',' << d << ',' << row.k << ',' << row.fast << ",fast,basis\n";
            os << row.n << ',' << d << ',' << row.k << ',' << row.naive << ",naive,direction\n";
        }
        os << "# fast_slope=" << fast_slope << " naive_slope=" << naive_slope << " slope_min=" << c.slope_min
           << " agreement=" << agreement << " sign_mismatches=" << sign_mismatch << '\n';
        emit_text(c, os.str());
    } else {
        Json r;
        r["command"] = "bench";
        r["config"] = {{"d", d}, {"seed", c.seed}, {"sizes", c.sizes}, {"reps", reps}, {"slope_min", c.slope_min}};
        r["fast_naive_max_rel_error"] = agreement;
        r["fast_naive_sign_mismatches"] = sign_mismatch;
        r["passed"] = agree;
        Json t = Json::array();
        for (const Row& row : rows)
            t.push_back({{"n", row.n}, {"k", row.k}, {"fast_basis_seconds", row.fast},
                         {"naive_direction_seconds", row.naive}});
        r["timing"] = {{"rows", t}};
        if (have_slope) {
            r["timing"]["fast_slope"] = fast_slope;
            r["timing"]["naive_slope"] = naive_slope;
        }
        emit(c, r);
    }
    return agree ? pass : verification_failed;
}

int cmd_selftest(const RunConfig& c) {
    const acceptance::Options opts{c.seed, c.threads};
    const auto results = acceptance::run_suite(opts);
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    if (c.format.empty())
        emit_text(c, acceptance::format_table(results));
    else
        emit(c, acceptance::to_json(results, opts));
    return ok ? pass : verification_failed;
}

} // namespace antisym::cli
