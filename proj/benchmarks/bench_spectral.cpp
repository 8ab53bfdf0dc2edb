#include <benchmark/benchmark.h>

#include <random>

#include "thetak/spectral.hpp"

using namespace thetak;

namespace {

Matrix random_symmetric(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
    return m;
}

}  // namespace

static void EigenDecompose(benchmark::State& state) {
    Matrix m = random_symmetric(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        auto ed = eigen_decompose(m);
        benchmark::DoNotOptimize(ed.spectrum.values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(EigenDecompose)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BlockFormSpectrum(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Matrix a = random_symmetric(n, 11), b = random_symmetric(n, 13);
    for (auto _ : state) {
        auto s = block_form_spectrum(a, b, 4);
        benchmark::DoNotOptimize(s.values.data());
    }
}
BENCHMARK(BlockFormSpectrum)->Arg(32)->Arg(128);

static void JPlusXASpectrum(benchmark::State& state) {
    Graph g = generate(FamilySpec::kneser(7, 2));
    Spectrum base = spectrum_of(adjacency_matrix(g));
    for (auto _ : state) {
        auto s = j_plus_xa_spectrum(base, -1.5);
        benchmark::DoNotOptimize(s.values.data());
    }
}
BENCHMARK(JPlusXASpectrum);

BENCHMARK_MAIN();
