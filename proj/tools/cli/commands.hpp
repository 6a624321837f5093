// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace antisym::cli {

enum ExitCode : int { pass = 0, verification_failed = 1, usage_error = 2 };

/// Raised for configurations that are well-formed flags but unusable values.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything a run depends on. Equal configs give equal reports, timing aside.
struct RunConfig {
    std::string command;
    std::optional<std::size_t> n, d, k;
    std::uint64_t seed = 42;
    std::optional<std::size_t> trials;
    double separation = 1e-3;
    std::string target; ///< spec file, inline JSON, bundled kind name, or "planted" (fit)
    std::string out;    ///< empty: stdout
    std::string format; ///< json or csv; empty picks the command default
    std::optional<std::string> dump; ///< decompose: "" or "-" means stdout
    std::size_t threads = 0;

    std::size_t restarts = 20; ///< verify-support
    bool plant = false;        ///< verify-support

    double ridge = 1e-8;          ///< fit
    std::size_t max_power = 2;    ///< fit
    bool pair_distances = false;  ///< fit
    std::size_t n_train = 0;      ///< fit; 0 = 50 x unknowns
    std::size_t n_test = 0;       ///< fit; 0 = n_train / 4
    std::string model;            ///< fit: write the fitted model here

    std::vector<std::size_t> sizes{64, 128, 256, 512, 1024, 2048}; ///< bench
    std::size_t reps = 1;                                          ///< bench
    std::size_t slope_min = 256;                                   ///< bench
};

int cmd_verify_support(const RunConfig& config);
int cmd_decompose(const RunConfig& config);
int cmd_reconstruct(const RunConfig& config);
int cmd_fit(const RunConfig& config);
int cmd_bench(const RunConfig& config);
int cmd_selftest(const RunConfig& config);

} // namespace antisym::cli
