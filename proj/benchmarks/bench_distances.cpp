#include <benchmark/benchmark.h>

#include "graphbounds/distances.hpp"
#include "graphbounds/generators.hpp"

using namespace graphbounds;

static void BM_AllPairsDistances(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = erdos_renyi(n, 0.1, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(all_pairs_distances(g));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_AllPairsDistances)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Complexity();

static void BM_OracleDistances(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = erdos_renyi(n, 0.1, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_distances(g));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_OracleDistances)->Arg(64)->Arg(128)->Arg(256)->Complexity();

static void BM_DistanceDistribution(benchmark::State& state) {
    const DistanceMatrix d = all_pairs_distances(erdos_renyi(256, 0.05, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance_distribution(d));
    }
}
BENCHMARK(BM_DistanceDistribution);
