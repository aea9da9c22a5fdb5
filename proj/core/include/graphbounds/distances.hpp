#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "graphbounds/graph.hpp"

namespace graphbounds {

// Dense all-pairs shortest-path distances. Unreachable pairs carry the
// kUnreachable sentinel, never a large finite stand-in, so averages cannot be
// silently corrupted. Immutable after construction.
class DistanceMatrix {
public:
    static constexpr std::int32_t kUnreachable = -1;

    DistanceMatrix() = default;
    explicit DistanceMatrix(int n)
        : n_(n),
          dist_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {}

    int vertex_count() const noexcept { return n_; }

    std::int32_t at(int i, int j) const { return dist_[index(i, j)]; }
    std::int32_t& at(int i, int j) { return dist_[index(i, j)]; }
    bool reachable(int i, int j) const { return at(i, j) != kUnreachable; }

    bool operator==(const DistanceMatrix&) const = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<std::int32_t> dist_;
};

// Ordered-pair distance census. All counts are over ordered pairs (i, j) with
// i != j, so pairs_d1 equals 2m. recip_mass_gt2 aggregates sum(1/d) over the
// finite pairs at distance > 2; pairs at infinite distance contribute 0.
struct PairDistanceSummary {
    std::uint64_t pairs_d1 = 0;
    std::uint64_t pairs_d2 = 0;
    std::uint64_t pairs_gt2_finite = 0;
    std::uint64_t pairs_inf = 0;
    double recip_mass_gt2 = 0.0;
    // finite distance -> ordered-pair count, diagonal excluded
    std::map<std::int32_t, std::uint64_t> histogram;
};

// BFS from every source. May run sources in parallel; the result is
// bit-identical to the sequential computation for any thread count.
DistanceMatrix all_pairs_distances(const Graph& g);

// Floyd-Warshall oracle for cross-checking all_pairs_distances. Throws
// SizeExceeded when g has more than max_n vertices.
DistanceMatrix oracle_distances(const Graph& g, int max_n = 256);

PairDistanceSummary distance_distribution(const DistanceMatrix& d);

}  // namespace graphbounds
