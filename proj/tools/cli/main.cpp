// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"
#include "json_config.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>

int main(int argc, char** argv) {
    using namespace antisym::cli;

    CLI::App app{"Antisymmetric basis construction, Slater decomposition and verification"};
    app.require_subcommand(1, 1);
    app.config_formatter(std::make_shared<JsonConfig>());
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.set_config("--config", "", "JSON object of option values; command-line flags win");

    RunConfig cfg;
    std::size_t n = 0, d = 0, k = 0, trials = 0;
    std::string dump;
    auto* n_opt = app.add_option("--n", n, "particle count");
    auto* d_opt = app.add_option("--d", d, "spatial dimension");
    auto* k_opt = app.add_option("--k", k, "direction count (default d*n+1)");
    app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
    auto* trials_opt = app.add_option("--trials", trials, "random configurations per check");
    app.add_option("--separation", cfg.separation, "minimum pair distance of sampled configurations")
        ->capture_default_str();
    app.add_option("--target", cfg.target, "target spec file, inline JSON, or kind name");
    app.add_option("--out", cfg.out, "report path (default stdout)");
    app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    auto* dump_opt = app.add_option("--dump", dump, "decompose: write the determinants (default stdout)")
                         ->expected(0, 1);
    app.add_option("--threads", cfg.threads, "worker threads, 0 = hardware")->capture_default_str();
    app.add_option("--restarts", cfg.restarts, "verify-support: adversarial restarts")->capture_default_str();
    app.add_flag("--plant", cfg.plant, "verify-support: add a planted off-coincidence zero of every basis value");
    app.add_option("--ridge", cfg.ridge, "fit: relative ridge")->capture_default_str();
    app.add_option("--max-power", cfg.max_power, "fit: highest power-sum degree")->capture_default_str();
    app.add_flag("--pair-distances", cfg.pair_distances, "fit: add pair-distance power sums");
    app.add_option("--n-train", cfg.n_train, "fit: training points (0 = automatic)");
    app.add_option("--n-test", cfg.n_test, "fit: test points (0 = automatic)");
    app.add_option("--model", cfg.model, "fit: write the fitted model here");
    app.add_option("--sizes", cfg.sizes, "bench: particle counts")->capture_default_str();
    app.add_option("--reps", cfg.reps, "bench: repeats, minimum time kept")->capture_default_str();
    app.add_option("--slope-min", cfg.slope_min, "bench: smallest N in the slope fit")->capture_default_str();

    const std::pair<const char*, const char*> commands[] = {
        {"verify-support", "check that the basis never vanishes off the coincidence set"},
        {"decompose", "split a target into K determinants and check the sum"},
        {"reconstruct", "check the exact reconstruction of a target"},
        {"fit", "fit linear symmetric heads to a target"},
        {"bench", "time basis evaluation against the direct kernel"},
        {"selftest", "run the acceptance suite"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        app.exit(e);
        return usage_error;
    }

    if (n_opt->count() > 0) cfg.n = n;
    if (d_opt->count() > 0) cfg.d = d;
    if (k_opt->count() > 0) cfg.k = k;
    if (trials_opt->count() > 0) cfg.trials = trials;
    if (dump_opt->count() > 0) cfg.dump = dump;
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.command == "verify-support") return cmd_verify_support(cfg);
        if (cfg.command == "decompose") return cmd_decompose(cfg);
        if (cfg.command == "reconstruct") return cmd_reconstruct(cfg);
        if (cfg.command == "fit") return cmd_fit(cfg);
        if (cfg.command == "bench") return cmd_bench(cfg);
        return cmd_selftest(cfg);
    } catch (const UsageError& e) {
        std::cerr << "antisym: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "antisym: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        std::cerr << "antisym: " << e.what() << '\n';
        return verification_failed;
    }
}
