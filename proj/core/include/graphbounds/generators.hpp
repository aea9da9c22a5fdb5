#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphbounds/bounds.hpp"
#include "graphbounds/graph.hpp"
#include "graphbounds/metrics.hpp"

namespace graphbounds {

// Default seed for every CLI entry point; fixed (never wall-clock) so default
// runs reproduce byte-for-byte.
inline constexpr std::uint64_t kDefaultSeed = 42;

// LFR-style community benchmark parameters. Zero-valued max_degree,
// min_community and max_community are resolved at generation time to n/2,
// max(8, largest intra-degree + 1) and n/2 respectively.
struct LfrParams {
    int n = 128;
    double tau_degree = 2.0;
    double tau_community = 1.0;
    double avg_degree = 16.0;
    int max_degree = 0;
    double mu = 0.2;  // inter-community mixing fraction; intra share is 1 - mu
    int min_community = 0;
    int max_community = 0;
    std::uint64_t seed = kDefaultSeed;
};

struct SweepConfig {
    std::vector<double> degrees;
    int realizations = 5;
    LfrParams base;  // seed field ignored; cells derive child seeds
    std::uint64_t master_seed = kDefaultSeed;
};

struct SweepCell {
    double avg_degree = 0.0;
    int realization = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;  // generator failure message when !ok
    MetricsReport metrics;
    BoundsReport bounds;
};

// G(n, p): each of the C(n, 2) unordered pairs included independently with
// probability p. Deterministic per seed. Throws InvalidProbability outside
// [0, 1].
Graph erdos_renyi(int n, double p, std::uint64_t seed);

// Degrees drawn from a truncated power law with exponent tau, discretized by
// rounding. The lower cutoff is searched so the realized mean lands within 10%
// of avg_degree; the sequence sum is forced even. Throws Infeasible when no
// cutoff achieves the target.
std::vector<int> sample_power_law_degrees(int n, double tau, double avg_degree,
                                          int max_degree, std::uint64_t seed);

// Community sizes drawn from a truncated power law until they cover n
// vertices; the tail is trimmed (and redistributed when the trim would violate
// min_community) so the total is exactly n.
std::vector<int> sample_community_sizes(int n, double tau, int min_community,
                                        int max_community, std::uint64_t seed);

// LFR benchmark graph: power-law degrees and community sizes, a fraction of
// roughly 1 - mu of each vertex's edges kept inside its community,
// configuration-model stub matching with bounded local rewiring. Deterministic
// per seed. Throws WiringFailure when rewiring cannot eliminate all conflicts
// within the retry budget.
Graph lfr(const LfrParams& params);

// Same generation with the community assignment and the realized mixing
// statistic (vertex-averaged share of intra-community edges, vertices of
// degree 0 excluded) kept for inspection.
struct LfrResult {
    Graph graph;
    std::vector<int> community;  // community index per vertex
    double intra_fraction = 0.0;
};

LfrResult lfr_detailed(const LfrParams& params);

// Child-seed derivation for sweep cells, documented in the README so
// individual cells can be re-run in isolation.
std::uint64_t sweep_child_seed(std::uint64_t master_seed, double avg_degree,
                               int realization);

// Generates, analyzes and bound-checks one graph per (degree, realization)
// pair. Cells may run in parallel; output ordering is (degree ascending by
// position, realization ascending) regardless of execution order. Generator
// failures are recorded per cell without aborting the sweep.
std::vector<SweepCell> run_sweep(const SweepConfig& config);

}  // namespace graphbounds
