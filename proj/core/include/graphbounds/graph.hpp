#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace graphbounds {

// Undirected simple graph over vertices 0..n-1. Adjacency lists are sorted
// ascending, loop-free, and symmetric; instances are immutable after
// construction and safe for concurrent reads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n)) {}

    // Builds a graph from undirected edges. Duplicate edges are collapsed.
    // Throws IndexOutOfRange for endpoints outside [0, n), SelfLoop for u == v.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    // Adopts adjacency lists that already satisfy the invariants (sorted,
    // symmetric, loop-free). Used by subgraph extraction and the generators.
    static Graph from_adjacency(std::vector<std::vector<int>> adjacency);

    int vertex_count() const noexcept { return n_; }
    std::int64_t edge_count() const noexcept { return m_; }

    int degree(int v) const;
    int min_degree() const noexcept;
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::vector<int>> adjacency_;
};

// Subgraph induced by the neighbors of v (v itself excluded).
Graph open_neighborhood_subgraph(const Graph& g, int v);

// Subgraph induced by v together with its neighbors. v is adjacent to every
// other vertex of the result, so the result has diameter <= 2 when deg(v) >= 1.
Graph closed_neighborhood_subgraph(const Graph& g, int v);

}  // namespace graphbounds
