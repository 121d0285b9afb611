#include "escher/classifier.hpp"
#include "escher/escherizer.hpp"

#include <benchmark/benchmark.h>

using namespace escher;

static void BM_SolveTwoRule(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve(SolveMode::TwoRule, {5, 10}));
}
BENCHMARK(BM_SolveTwoRule);

static void BM_ClassifyAll(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classify_all());
}
BENCHMARK(BM_ClassifyAll)->Unit(benchmark::kMillisecond);

static void BM_GenerateSpread(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(generate_spread({5, 10}, Prototile::Alpha, s));
}
BENCHMARK(BM_GenerateSpread)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

static void BM_OracleCheck(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(compare_with_oracle(SolveMode::TwoRule, {0, 10}, 4));
}
BENCHMARK(BM_OracleCheck)->Unit(benchmark::kMillisecond);

static void BM_Render(benchmark::State& state) {
    const auto sol = solve(SolveMode::TwoRule, {5, 10});
    const auto params = random_assignment(sol.system, 1);
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(render(sol, s, params));
}
BENCHMARK(BM_Render)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
