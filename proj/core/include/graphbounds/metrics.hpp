#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "graphbounds/distances.hpp"
#include "graphbounds/graph.hpp"

namespace graphbounds {

// Sentinel for metrics of disconnected graphs; serialized as the string "inf".
inline constexpr double kInfinite = std::numeric_limits<double>::infinity();

// Every scalar metric of a single graph. char_path_length and diameter are
// kInfinite exactly when the graph is disconnected (n >= 2).
struct MetricsReport {
    int n = 0;
    std::int64_t m = 0;
    int min_degree = 0;
    double density = 0.0;
    double char_path_length = 0.0;
    double diameter = 0.0;
    double global_efficiency = 0.0;
    double local_efficiency_open = 0.0;
    double local_efficiency_closed = 0.0;
    double clustering_open = 0.0;
    double clustering_closed = 0.0;
    // fraction of ordered vertex pairs at distance <= 2
    double frac_pairs_le2 = 0.0;
};

// Entrywise reciprocal-distance matrix: 1/d for finite distances, 0 for
// unreachable pairs and on the diagonal.
struct EfficiencyMatrix {
    int n = 0;
    std::vector<double> eff;

    double at(int i, int j) const {
        return eff[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(j)];
    }
};

// 2m / (n(n-1)). Throws TooFewVertices when n < 2.
double density(const Graph& g);

// Mean distance over ordered pairs; kInfinite if any pair is unreachable.
// Throws TooFewVertices when n < 2.
double characteristic_path_length(const DistanceMatrix& d);

// Mean reciprocal distance over ordered pairs, unreachable pairs contributing
// 0. Returns 0 when n < 2.
double global_efficiency(const DistanceMatrix& d);

EfficiencyMatrix efficiency_matrix(const DistanceMatrix& d);

// Watts-Strogatz clustering: per-vertex neighborhood edge count over
// C(deg(v), 2), averaged over all n vertices. Vertices of degree < 2
// contribute 0. Throws TooFewVertices when n < 1.
double clustering_coefficient_open(const Graph& g);

// Closed variant over closed neighborhoods; isolated vertices contribute 0.
double clustering_coefficient_closed(const Graph& g);

// Mean global efficiency of the open neighborhood subgraphs; subgraphs with
// fewer than 2 vertices contribute 0. Throws TooFewVertices when n < 1.
double local_efficiency_open(const Graph& g);

// Mean global efficiency of the closed neighborhood subgraphs.
double local_efficiency_closed(const Graph& g);

// Computes the distance matrix once and derives every report field from it
// plus neighborhood passes. Throws TooFewVertices when n < 2.
MetricsReport compute_all(const Graph& g);

// Same, reusing an already-computed distance matrix and distance census.
MetricsReport compute_all(const Graph& g, const DistanceMatrix& d,
                          const PairDistanceSummary& s);

}  // namespace graphbounds
