#include "graphbounds/verify.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graphbounds/bounds.hpp"
#include "graphbounds/distances.hpp"
#include "graphbounds/errors.hpp"
#include "graphbounds/generators.hpp"
#include "graphbounds/metrics.hpp"
#include "graphbounds/parallel.hpp"
#include "graphbounds/rng.hpp"

namespace graphbounds {

namespace {

void record(std::vector<Violation>& out, const Graph& g, std::string check,
            std::string detail) {
    if (out.size() < static_cast<std::size_t>(kMaxRecordedViolations)) {
        out.push_back(Violation{std::move(check), std::move(detail), g});
    }
}

}  // namespace

bool check_graph_soundness(const Graph& g, std::vector<Violation>& out) {
    const std::size_t before = out.size();
    const GraphAnalysis a = analyze_graph(g);

    for (const auto& check : a.bounds.checks) {
        if (check.applicable && !check.satisfied) {
            record(out, g, check.name, "slack " + std::to_string(check.slack));
        }
    }
    // closed equality must hold exactly, not merely as an inequality
    if (a.metrics.min_degree >= 1) {
        const BoundCheck* closed = a.bounds.find(kCheckClosedEquality);
        if (closed != nullptr &&
            std::fabs(closed->lhs - closed->rhs) > kBoundTolerance) {
            record(out, g, "thm1_exact",
                   "|lhs - rhs| = " + std::to_string(std::fabs(closed->lhs - closed->rhs)));
        }
    }
    const double gap = a.bounds.gap_lemma6;
    const double gap_bound = a.bounds.gap_bound_lemma6;
    if (gap < -kBoundTolerance || gap > gap_bound + kBoundTolerance) {
        record(out, g, "thm9_gap_sandwich",
               "gap " + std::to_string(gap) + " bound " + std::to_string(gap_bound));
    }
    if (a.bounds.tightness_diam_le2) {
        for (const char* name :
             {kCheckDensityUpper, kCheckPathLower, kCheckGlobPathLower}) {
            const BoundCheck* check = a.bounds.find(name);
            if (check != nullptr && check->applicable &&
                std::fabs(check->slack) > kBoundTolerance) {
                record(out, g, std::string("tightness_") + name,
                       "slack " + std::to_string(check->slack) + " with diameter <= 2");
            }
        }
    }
    if (g.vertex_count() <= 50 &&
        all_pairs_distances(g) != oracle_distances(g)) {
        record(out, g, "bfs_vs_oracle", "distance matrices differ");
    }
    return out.size() == before;
}

VerificationReport verify_exhaustive(int max_n) {
    if (max_n > 7) {
        throw SizeExceeded("exhaustive verification capped at 7 vertices");
    }
    VerificationReport report;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
        }
        const std::uint64_t total = 1ULL << slots.size();
        const std::size_t shards =
            std::min<std::size_t>(static_cast<std::size_t>(thread_count()) * 4, 64);
        std::vector<std::vector<Violation>> found(shards);
        std::vector<std::uint64_t> counted(shards, 0);
        parallel_chunks(shards, [&](std::size_t begin, std::size_t end) {
            for (std::size_t shard = begin; shard < end; ++shard) {
                const std::uint64_t lo = total * shard / shards;
                const std::uint64_t hi = total * (shard + 1) / shards;
                std::vector<std::pair<int, int>> edges;
                for (std::uint64_t mask = lo; mask < hi; ++mask) {
                    edges.clear();
                    for (std::size_t bit = 0; bit < slots.size(); ++bit) {
                        if (mask & (1ULL << bit)) edges.push_back(slots[bit]);
                    }
                    check_graph_soundness(Graph::from_edge_list(n, edges), found[shard]);
                    ++counted[shard];
                }
            }
        });
        for (std::size_t shard = 0; shard < shards; ++shard) {
            report.graphs_checked += counted[shard];
            for (auto& violation : found[shard]) {
                if (report.violations.size() <
                    static_cast<std::size_t>(kMaxRecordedViolations)) {
                    report.violations.push_back(std::move(violation));
                }
            }
        }
    }
    return report;
}

VerificationReport verify_random(int count, std::uint64_t seed) {
    static constexpr double kProbabilityGrid[] = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35,
                                                  0.40, 0.45, 0.50, 0.55, 0.60, 0.65, 0.70,
                                                  0.75, 0.80, 0.85, 0.90, 0.95};
    constexpr int kGridSize = static_cast<int>(std::size(kProbabilityGrid));
    VerificationReport report;
    const std::size_t shards =
        std::min<std::size_t>(static_cast<std::size_t>(thread_count()) * 4, 64);
    std::vector<std::vector<Violation>> found(shards);
    std::vector<std::uint64_t> counted(shards, 0);
    parallel_chunks(shards, [&](std::size_t shard_begin, std::size_t shard_end) {
        for (std::size_t shard = shard_begin; shard < shard_end; ++shard) {
            const std::size_t lo = static_cast<std::size_t>(count) * shard / shards;
            const std::size_t hi = static_cast<std::size_t>(count) * (shard + 1) / shards;
            for (std::size_t i = lo; i < hi; ++i) {
                const double p = kProbabilityGrid[i % kGridSize];
                const int n = 2 + static_cast<int>(i % 59);
                const std::uint64_t child =
                    splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(i));
                check_graph_soundness(erdos_renyi(n, p, child), found[shard]);
                ++counted[shard];
            }
        }
    });
    for (std::size_t shard = 0; shard < shards; ++shard) {
        report.graphs_checked += counted[shard];
        for (auto& violation : found[shard]) {
            if (report.violations.size() < static_cast<std::size_t>(kMaxRecordedViolations)) {
                report.violations.push_back(std::move(violation));
            }
        }
    }
    return report;
}

}  // namespace graphbounds
