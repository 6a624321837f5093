// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/basis.hpp>
#include <antisym/polynomial.hpp>
#include <antisym/random.hpp>
#include <antisym/slater.hpp>
#include <antisym/targets.hpp>
#include <antisym/vandermonde.hpp>

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace antisym;

std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    std::normal_distribution<double> normal;
    std::vector<double> s(n);
    for (double& v : s) v = normal(rng);
    return s;
}

void BM_ProductFast(benchmark::State& state) {
    const auto s = random_values(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(product_of_differences_fast(s));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProductFast)->RangeMultiplier(2)->Range(64, 4096)->Complexity();

void BM_ProductNaive(benchmark::State& state) {
    const auto s = random_values(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(product_of_differences_naive(s));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProductNaive)->RangeMultiplier(2)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_ProductSorted(benchmark::State& state) {
    const auto s = random_values(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(product_of_differences_sorted(s));
}
BENCHMARK(BM_ProductSorted)->RangeMultiplier(2)->Range(8, 256);

// Full basis, K = dN + 1 directions.
void BM_EvaluateBasis(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    constexpr std::size_t d = 3;
    Rng rng = make_rng(2);
    const Configuration x = random_configuration(n, d, rng);
    const DirectionSet ys = sample_directions(n, d, std::nullopt, 3);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_basis(ys, x).log_norm);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvaluateBasis)->RangeMultiplier(2)->Range(16, 1024)->Unit(benchmark::kMillisecond)->Complexity();

void BM_MultipointEval(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Polynomial p(random_values(n, 4));
    const auto points = random_values(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(multipoint_eval(p, points));
}
BENCHMARK(BM_MultipointEval)->RangeMultiplier(4)->Range(64, 4096);

void BM_Decompose(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    constexpr std::size_t d = 2;
    const TargetOracle target = bundled_target(TargetKind::slater_closed_form, n, d, 6);
    const DirectionSet ys = sample_directions(n, d, std::nullopt, 7);
    Rng rng = make_rng(8);
    const Configuration x = random_configuration(n, d, rng);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(target, ys, x).total);
}
BENCHMARK(BM_Decompose)->DenseRange(2, 6);

} // namespace

BENCHMARK_MAIN();
