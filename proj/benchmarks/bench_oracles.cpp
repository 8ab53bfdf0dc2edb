#include <benchmark/benchmark.h>

#include "thetak/corpus.hpp"
#include "thetak/oracles.hpp"

using namespace thetak;

static void ExactChromaticPetersen(benchmark::State& state) {
    Graph g = generate(FamilySpec::kneser(5, 2));
    for (auto _ : state) {
        auto r = exact_chromatic(g);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(ExactChromaticPetersen);

static void ExactChiK(benchmark::State& state) {
    Graph g = generate(FamilySpec::cycle(7));
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = exact_chi_k(g, k);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(ExactChiK)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void ExactAlphaKneser72(benchmark::State& state) {
    Graph g = generate(FamilySpec::kneser(7, 2));
    for (auto _ : state) {
        auto r = exact_alpha(g);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(ExactAlphaKneser72);

static void EnumerateConnected(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto graphs = connected_graphs(n);
        benchmark::DoNotOptimize(graphs.size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(EnumerateConnected)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
