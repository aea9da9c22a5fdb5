#include "graphbounds/graph.hpp"

#include <algorithm>
#include <string>

#include "graphbounds/errors.hpp"

namespace graphbounds {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw IndexOutOfRange("vertex count must be nonnegative");
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw IndexOutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") outside [0, " + std::to_string(n) + ")");
        }
        if (u == v) {
            throw SelfLoop("self-loop at vertex " + std::to_string(u));
        }
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    std::int64_t degree_sum = 0;
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        degree_sum += static_cast<std::int64_t>(list.size());
    }
    g.m_ = degree_sum / 2;
    return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adjacency) {
    Graph g;
    g.n_ = static_cast<int>(adjacency.size());
    g.adjacency_ = std::move(adjacency);
    std::int64_t degree_sum = 0;
    for (const auto& list : g.adjacency_) degree_sum += static_cast<std::int64_t>(list.size());
    g.m_ = degree_sum / 2;
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw IndexOutOfRange("vertex " + std::to_string(v) + " outside [0, " +
                              std::to_string(n_) + ")");
    }
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
}

int Graph::min_degree() const noexcept {
    int min = n_ == 0 ? 0 : n_;
    for (const auto& list : adjacency_) min = std::min(min, static_cast<int>(list.size()));
    return min;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v : adjacency_[static_cast<std::size_t>(u)]) {
            if (u < v) result.emplace_back(u, v);
        }
    }
    return result;
}

namespace {

// Induced subgraph on a sorted vertex set, relabeled to 0..k-1 in that order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& members) {
    const std::size_t k = members.size();
    std::vector<std::vector<int>> adjacency(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& neighbors = g.neighbors(members[i]);
        // two-pointer intersection; both sequences are sorted ascending
        std::size_t a = 0, b = 0;
        while (a < neighbors.size() && b < k) {
            if (neighbors[a] < members[b]) {
                ++a;
            } else if (neighbors[a] > members[b]) {
                ++b;
            } else {
                adjacency[i].push_back(static_cast<int>(b));
                ++a;
                ++b;
            }
        }
    }
    return Graph::from_adjacency(std::move(adjacency));
}

}  // namespace

Graph open_neighborhood_subgraph(const Graph& g, int v) {
    return induced_subgraph(g, g.neighbors(v));
}

Graph closed_neighborhood_subgraph(const Graph& g, int v) {
    const auto& neighbors = g.neighbors(v);
    std::vector<int> members;
    members.reserve(neighbors.size() + 1);
    auto insert_at = std::upper_bound(neighbors.begin(), neighbors.end(), v);
    members.insert(members.end(), neighbors.begin(), insert_at);
    members.push_back(v);
    members.insert(members.end(), insert_at, neighbors.end());
    return induced_subgraph(g, members);
}

}  // namespace graphbounds
