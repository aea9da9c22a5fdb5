#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphbounds/graph.hpp"

namespace graphbounds {

// One falsified relationship, with the offending graph kept for reproduction.
struct Violation {
    std::string check;
    std::string detail;
    Graph graph;
};

struct VerificationReport {
    std::uint64_t graphs_checked = 0;
    std::vector<Violation> violations;  // capped at kMaxRecordedViolations

    bool ok() const noexcept { return violations.empty(); }
};

inline constexpr int kMaxRecordedViolations = 32;

// Checks every proved relationship on one graph (n >= 2): the five bound
// checks where applicable, the exact closed equality when min degree >= 1,
// the gap sandwich 0 <= (1+D)/2 - E_glob <= (1 - frac_pairs_le2)/2, and
// simultaneous tightness of the three global bounds when diam <= 2.
// Also cross-checks BFS distances against the Floyd-Warshall oracle for
// n <= 50. Appends violations; returns true when none were found.
bool check_graph_soundness(const Graph& g, std::vector<Violation>& out);

// Every labeled graph on 2..max_n vertices (max_n <= 7, else SizeExceeded).
// The 2^C(n,2) graph space is sharded across workers with deterministic
// aggregation.
VerificationReport verify_exhaustive(int max_n);

// Seeded Erdos-Renyi graphs: n cycling over [2, 60], p over the fixed grid
// {0.05, 0.10, ..., 0.95}.
VerificationReport verify_random(int count, std::uint64_t seed);

}  // namespace graphbounds
