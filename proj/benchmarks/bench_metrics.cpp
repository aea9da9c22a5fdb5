#include <benchmark/benchmark.h>

#include "graphbounds/bounds.hpp"
#include "graphbounds/generators.hpp"
#include "graphbounds/metrics.hpp"

using namespace graphbounds;

static void BM_ComputeAll(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double p = static_cast<double>(state.range(1)) / 100.0;
    const Graph g = erdos_renyi(n, p, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_all(g));
    }
}
BENCHMARK(BM_ComputeAll)->Args({64, 10})->Args({64, 50})->Args({128, 10})->Args({128, 50});

static void BM_LocalEfficiencyClosed(benchmark::State& state) {
    const Graph g = erdos_renyi(128, 0.3, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(local_efficiency_closed(g));
    }
}
BENCHMARK(BM_LocalEfficiencyClosed);

static void BM_EvaluateAll(benchmark::State& state) {
    const Graph g = erdos_renyi(128, 0.2, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_all(g));
    }
}
BENCHMARK(BM_EvaluateAll);
