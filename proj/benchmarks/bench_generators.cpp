#include <benchmark/benchmark.h>

#include "graphbounds/generators.hpp"

using namespace graphbounds;

static void BM_ErdosRenyi(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(erdos_renyi(n, 0.3, ++seed));
    }
}
BENCHMARK(BM_ErdosRenyi)->Arg(128)->Arg(512);

static void BM_Lfr(benchmark::State& state) {
    LfrParams params;
    params.n = 128;
    params.avg_degree = static_cast<double>(state.range(0));
    for (auto _ : state) {
        ++params.seed;
        benchmark::DoNotOptimize(lfr(params));
    }
}
BENCHMARK(BM_Lfr)->Arg(8)->Arg(32)->Arg(64);
