#include <benchmark/benchmark.h>

#include "vexcap/generators.hpp"
#include "vexcap/grid.hpp"
#include "vexcap/strategy_b.hpp"
#include "vexcap/variation.hpp"

using namespace vexcap;

static void BM_GenerateBrownian(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(paths::generate_brownian(n, 1.0, 1.0, seed++));
}
BENCHMARK(BM_GenerateBrownian)->Arg(1 << 10)->Arg(1 << 14);

static void BM_GenerateFbm(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(paths::generate_fbm(n, 1.0, 0.25, seed++));
}
BENCHMARK(BM_GenerateFbm)->Arg(1 << 10)->Arg(1 << 14);

static void BM_VarP(benchmark::State& state) {
    auto w = paths::generate_brownian(
        static_cast<std::size_t>(state.range(0)), 1.0, 1.0, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(analysis::var_p(w, 2.5));
}
BENCHMARK(BM_VarP)->Arg(1 << 8)->Arg(1 << 10)->Arg(1 << 12);

static void BM_GridCrossings(benchmark::State& state) {
    auto w = paths::generate_brownian(
        static_cast<std::size_t>(state.range(0)), 1.0, 1.0, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(paths::grid_crossings(w, 0.01));
}
BENCHMARK(BM_GridCrossings)->Arg(1 << 10)->Arg(1 << 14);

static void BM_StrategyB(benchmark::State& state) {
    auto w = paths::generate_brownian(
        static_cast<std::size_t>(state.range(0)), 1.0, 1.0, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(game::strategy_b(w, 2.5, 2.0, 6));
}
BENCHMARK(BM_StrategyB)->Arg(1 << 10)->Arg(1 << 12);

BENCHMARK_MAIN();
