#include "graphbounds/metrics.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "graphbounds/errors.hpp"
#include "graphbounds/parallel.hpp"

namespace graphbounds {

namespace {

void require_vertices(int n, int minimum) {
    if (n < minimum) {
        throw TooFewVertices("graph has " + std::to_string(n) + " vertices, need at least " +
                             std::to_string(minimum));
    }
}

double ordered_pair_count(int n) {
    return static_cast<double>(n) * static_cast<double>(n - 1);
}

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

}  // namespace

double density(const Graph& g) {
    require_vertices(g.vertex_count(), 2);
    return 2.0 * static_cast<double>(g.edge_count()) / ordered_pair_count(g.vertex_count());
}

double characteristic_path_length(const DistanceMatrix& d) {
    const int n = d.vertex_count();
    require_vertices(n, 2);
    std::uint64_t sum = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const std::int32_t dist = d.at(i, j);
            if (dist == DistanceMatrix::kUnreachable) return kInfinite;
            sum += static_cast<std::uint64_t>(dist);
        }
    }
    return static_cast<double>(sum) / ordered_pair_count(n);
}

double global_efficiency(const DistanceMatrix& d) {
    const int n = d.vertex_count();
    if (n < 2) return 0.0;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const std::int32_t dist = d.at(i, j);
            if (dist != DistanceMatrix::kUnreachable) sum += 1.0 / static_cast<double>(dist);
        }
    }
    return sum / ordered_pair_count(n);
}

EfficiencyMatrix efficiency_matrix(const DistanceMatrix& d) {
    const int n = d.vertex_count();
    EfficiencyMatrix e;
    e.n = n;
    e.eff.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const std::int32_t dist = d.at(i, j);
            if (dist != DistanceMatrix::kUnreachable) {
                e.eff[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)] = 1.0 / static_cast<double>(dist);
            }
        }
    }
    return e;
}

namespace {

// Edges among the neighbors of v, i.e. |E(G_v)|, via sorted adjacency
// intersection without materializing the subgraph.
std::int64_t neighborhood_edge_count(const Graph& g, int v) {
    const auto& members = g.neighbors(v);
    std::int64_t twice_edges = 0;
    for (int u : members) {
        const auto& list = g.neighbors(u);
        std::size_t a = 0, b = 0;
        while (a < list.size() && b < members.size()) {
            if (list[a] < members[b]) {
                ++a;
            } else if (list[a] > members[b]) {
                ++b;
            } else {
                ++twice_edges;
                ++a;
                ++b;
            }
        }
    }
    return twice_edges / 2;
}

// Per-vertex terms computed in parallel, summed in ascending vertex order so
// the result is reproducible bit-for-bit for any thread count.
template <typename PerVertex>
double vertex_average(const Graph& g, PerVertex&& term) {
    const int n = g.vertex_count();
    std::vector<double> terms(static_cast<std::size_t>(n), 0.0);
    parallel_chunks(static_cast<std::size_t>(n), [&](std::size_t begin, std::size_t end) {
        for (std::size_t v = begin; v < end; ++v) terms[v] = term(static_cast<int>(v));
    });
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum / static_cast<double>(n);
}

}  // namespace

double clustering_coefficient_open(const Graph& g) {
    require_vertices(g.vertex_count(), 1);
    return vertex_average(g, [&](int v) {
        const std::int64_t deg = g.degree(v);
        if (deg < 2) return 0.0;
        return static_cast<double>(neighborhood_edge_count(g, v)) /
               static_cast<double>(choose2(deg));
    });
}

double clustering_coefficient_closed(const Graph& g) {
    require_vertices(g.vertex_count(), 1);
    return vertex_average(g, [&](int v) {
        const std::int64_t deg = g.degree(v);
        if (deg < 1) return 0.0;
        // |E(G'_v)| = |E(G_v)| + deg(v): v's own edges join the neighborhood's
        const std::int64_t closed_edges = neighborhood_edge_count(g, v) + deg;
        return static_cast<double>(closed_edges) / static_cast<double>(choose2(deg + 1));
    });
}

double local_efficiency_open(const Graph& g) {
    require_vertices(g.vertex_count(), 1);
    return vertex_average(g, [&](int v) {
        const Graph sub = open_neighborhood_subgraph(g, v);
        if (sub.vertex_count() < 2) return 0.0;
        return global_efficiency(all_pairs_distances(sub));
    });
}

double local_efficiency_closed(const Graph& g) {
    require_vertices(g.vertex_count(), 1);
    return vertex_average(g, [&](int v) {
        const Graph sub = closed_neighborhood_subgraph(g, v);
        if (sub.vertex_count() < 2) return 0.0;
        return global_efficiency(all_pairs_distances(sub));
    });
}

MetricsReport compute_all(const Graph& g) {
    require_vertices(g.vertex_count(), 2);
    const DistanceMatrix d = all_pairs_distances(g);
    return compute_all(g, d, distance_distribution(d));
}

MetricsReport compute_all(const Graph& g, const DistanceMatrix& d,
                          const PairDistanceSummary& s) {
    const int n = g.vertex_count();
    require_vertices(n, 2);
    MetricsReport r;
    r.n = n;
    r.m = g.edge_count();
    r.min_degree = g.min_degree();
    r.density = density(g);
    r.char_path_length = characteristic_path_length(d);
    r.diameter = s.pairs_inf > 0 ? kInfinite
                 : s.histogram.empty() ? 0.0
                                       : static_cast<double>(s.histogram.rbegin()->first);
    r.global_efficiency = global_efficiency(d);
    r.local_efficiency_open = local_efficiency_open(g);
    r.local_efficiency_closed = local_efficiency_closed(g);
    r.clustering_open = clustering_coefficient_open(g);
    r.clustering_closed = clustering_coefficient_closed(g);
    r.frac_pairs_le2 =
        static_cast<double>(s.pairs_d1 + s.pairs_d2) / ordered_pair_count(n);
    return r;
}

}  // namespace graphbounds
