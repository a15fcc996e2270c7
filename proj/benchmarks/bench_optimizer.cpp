#include <benchmark/benchmark.h>

#include "lumilink/optimizer.hpp"
#include "lumilink/sim.hpp"

namespace {

const lumilink::SystemParams kParams = lumilink::default_params();
const lumilink::SolverSettings kSettings = lumilink::default_settings();

lumilink::ChannelState channel() {
    return lumilink::build_channel(lumilink::Scenario{1.0, 6.0, 2.4e9, 0.8}, kParams);
}

void BM_BiasSearch(benchmark::State& state) {
    const auto ch = channel();
    for (auto _ : state) {
        benchmark::DoNotOptimize(lumilink::solve_subproblem1(0.4, 2e-7, ch, kParams, kSettings, 0.775));
    }
}
BENCHMARK(BM_BiasSearch);

void BM_SplitSearch(benchmark::State& state) {
    const auto ch = channel();
    for (auto _ : state) {
        benchmark::DoNotOptimize(lumilink::solve_subproblem2(0.8, 2e-7, ch, kParams, kSettings));
    }
}
BENCHMARK(BM_SplitSearch);

void BM_OptimizeBlock(benchmark::State& state) {
    const auto ch = channel();
    const auto spec = lumilink::case_from_index(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lumilink::optimize_block(spec, lumilink::BlockState{2e-7}, ch, kParams, kSettings));
    }
}
BENCHMARK(BM_OptimizeBlock)->DenseRange(1, 4);

void BM_GridOracle(benchmark::State& state) {
    const auto ch = channel();
    const auto spec = lumilink::case_from_index(1);
    const int grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lumilink::brute_force_oracle(spec, lumilink::BlockState{2e-7}, ch, kParams, grid));
    }
}
BENCHMARK(BM_GridOracle)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_Trial(benchmark::State& state) {
    lumilink::ExperimentConfig config;
    lumilink::RandomStream rng(1);
    const auto draw = lumilink::draw_trial(config.d_r, config.d_u, config.n_blocks, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            lumilink::run_trial(lumilink::case_from_index(1), draw, config, kParams, kSettings));
    }
}
BENCHMARK(BM_Trial)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
