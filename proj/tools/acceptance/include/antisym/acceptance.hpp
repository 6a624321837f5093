// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file acceptance.hpp
 * @brief The end-to-end acceptance suite shared by `antisym selftest` and the ctest driver.
 *
 * Every criterion reports its numbers under "metrics" and anything derived
 * from wall-clock time under "timing". Determinism comparisons look at
 * "metrics" and "passed" only.
 */

#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace antisym::acceptance {

struct Options {
    std::uint64_t seed = 42;
    std::size_t threads = 0;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
    nlohmann::ordered_json timing = nlohmann::ordered_json::object();
};

inline constexpr int kCriterionCount = 9;

/// Runs one criterion in 1..8. Criterion 9 needs the full suite; use run_suite.
[[nodiscard]] CriterionResult run_criterion(int id, const Options& options);

/// Criteria 1..9. Criterion 9 reruns 1..8 with a different thread count and compares.
[[nodiscard]] std::vector<CriterionResult> run_suite(const Options& options);

[[nodiscard]] nlohmann::ordered_json to_json(const std::vector<CriterionResult>& results, const Options& options);

/// One line per criterion: "[PASS] 3  title  key=value ...".
[[nodiscard]] std::string format_table(const std::vector<CriterionResult>& results);

/// True when both documents agree after every "timing" member is removed.
[[nodiscard]] bool same_numbers(const nlohmann::ordered_json& a, const nlohmann::ordered_json& b);

[[nodiscard]] nlohmann::ordered_json strip_timing(nlohmann::ordered_json j);

/// Log-log least-squares slope of y against x.
[[nodiscard]] double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace antisym::acceptance
