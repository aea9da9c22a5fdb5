#include "graphbounds/distances.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "graphbounds/errors.hpp"
#include "graphbounds/parallel.hpp"

namespace graphbounds {

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix result(n);
    parallel_chunks(static_cast<std::size_t>(n), [&](std::size_t begin, std::size_t end) {
        std::vector<int> queue(static_cast<std::size_t>(n));
        for (std::size_t s = begin; s < end; ++s) {
            const int source = static_cast<int>(s);
            int head = 0, tail = 0;
            result.at(source, source) = 0;
            queue[tail++] = source;
            while (head < tail) {
                const int u = queue[head++];
                const std::int32_t next = result.at(source, u) + 1;
                for (int v : g.neighbors(u)) {
                    if (result.at(source, v) == DistanceMatrix::kUnreachable) {
                        result.at(source, v) = next;
                        queue[tail++] = v;
                    }
                }
            }
        }
    });
    return result;
}

DistanceMatrix oracle_distances(const Graph& g, int max_n) {
    const int n = g.vertex_count();
    if (n > max_n) {
        throw SizeExceeded("oracle_distances limited to " + std::to_string(max_n) +
                           " vertices, got " + std::to_string(n));
    }
    // Floyd-Warshall over a large-but-safe finite infinity, converted back to
    // the sentinel at the end.
    const std::int32_t inf = n + 1;
    DistanceMatrix d(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) d.at(i, j) = inf;
        d.at(i, i) = 0;
        for (int j : g.neighbors(i)) d.at(i, j) = 1;
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            const std::int32_t dik = d.at(i, k);
            if (dik >= inf) continue;
            for (int j = 0; j < n; ++j) {
                const std::int32_t through = dik + d.at(k, j);
                if (through < d.at(i, j)) d.at(i, j) = through;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (d.at(i, j) >= inf) d.at(i, j) = DistanceMatrix::kUnreachable;
        }
    }
    return d;
}

PairDistanceSummary distance_distribution(const DistanceMatrix& d) {
    const int n = d.vertex_count();
    PairDistanceSummary s;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const std::int32_t dist = d.at(i, j);
            if (dist == DistanceMatrix::kUnreachable) {
                ++s.pairs_inf;
                continue;
            }
            ++s.histogram[dist];
            if (dist == 1) {
                ++s.pairs_d1;
            } else if (dist == 2) {
                ++s.pairs_d2;
            } else {
                ++s.pairs_gt2_finite;
            }
        }
    }
    // aggregate reciprocal mass per distinct distance, ascending, so the
    // summation order is fixed
    for (const auto& [dist, count] : s.histogram) {
        if (dist > 2) {
            s.recip_mass_gt2 += static_cast<double>(count) / static_cast<double>(dist);
        }
    }
    return s;
}

}  // namespace graphbounds
