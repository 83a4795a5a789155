// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "fusionrank/closed_form.hpp"
#include "fusionrank/dual_graph.hpp"
#include "fusionrank/graph_oracle.hpp"
#include "fusionrank/rank_engine.hpp"

using namespace fusionrank;

namespace {

void BM_NoLeafSerial(benchmark::State& state) {
    const auto graph = moebius_ladder(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_noleaf_subgraphs_serial(graph));
}

void BM_NoLeafParallel(benchmark::State& state) {
    const auto graph = moebius_ladder(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_noleaf_subgraphs(graph));
}

DualGraph big_graph(std::int64_t which) {
    return which == 0 ? fig_a_graph(14, 2) : fig_b_graph(12, 2);
}

// A fresh engine per iteration so the memo does not hide the labeling sum.
void BM_GraphRankSerial(benchmark::State& state) {
    const auto graph = big_graph(state.range(0));
    const FusionRing ring = FusionRing::g2_level1();
    for (auto _ : state) {
        const RankEngine engine(ring);
        benchmark::DoNotOptimize(engine.graph_serial(graph));
    }
}

void BM_GraphRankParallel(benchmark::State& state) {
    const auto graph = big_graph(state.range(0));
    const FusionRing ring = FusionRing::g2_level1();
    for (auto _ : state) {
        const RankEngine engine(ring);
        benchmark::DoNotOptimize(engine.graph(graph));
    }
}

void BM_VerifyGridSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_grid_serial(2, 50, 0, 50));
}

void BM_VerifyGridParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_grid(2, 50, 0, 50, false, 0));
}

}  // namespace

BENCHMARK(BM_NoLeafSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NoLeafParallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GraphRankSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GraphRankParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyGridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyGridParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
