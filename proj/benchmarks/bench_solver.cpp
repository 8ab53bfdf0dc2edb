#include <benchmark/benchmark.h>

#include "thetak/theta_solver.hpp"

using namespace thetak;

static void SdpSplittingPetersen(benchmark::State& state) {
    Graph g = generate(FamilySpec::kneser(5, 2));
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = theta_k_sdp(g, k);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(SdpSplittingPetersen)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void SdpSplittingCycle15(benchmark::State& state) {
    Graph g = generate(FamilySpec::cycle(15));
    for (auto _ : state) {
        auto r = theta_k_sdp(g, 2);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(SdpSplittingCycle15)->Unit(benchmark::kMillisecond);

static void SubgradientUpper(benchmark::State& state) {
    Graph g = generate(FamilySpec::cycle(9));
    SolverConfig cfg;
    cfg.max_iterations = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = theta_k_eig_upper(g, 2, cfg);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(SubgradientUpper)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

static void SymmetricFastPath(benchmark::State& state) {
    Graph g = generate(FamilySpec::kneser(7, 2));
    for (auto _ : state) {
        auto r = theta_k_symmetric(g, 2);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(SymmetricFastPath)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
