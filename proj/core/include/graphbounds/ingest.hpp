#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphbounds/graph.hpp"

namespace graphbounds {

// Symmetric Pearson-correlation matrix with unit diagonal, entries in [-1, 1].
struct CorrelationMatrix {
    int n = 0;
    std::vector<double> r;  // row-major n*n
    std::vector<std::string> labels;  // empty when the CSV had no header row

    double at(int i, int j) const {
        return r[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
    }
};

// CSV of n rows x n columns of reals, optional single header row of labels.
// Tiny asymmetries (<= 1e-6) are repaired by averaging (r + r^T)/2; larger
// ones indicate corrupt data and throw AsymmetryTooLarge. NaN entries and
// values outside [-1, 1] (beyond 1e-9 parsing noise) are rejected.
CorrelationMatrix parse_correlation_csv(std::string_view text);

// Edge (i, j) for i != j iff r(i, j) > threshold (or >= with inclusive=true);
// the diagonal is ignored.
Graph binarize(const CorrelationMatrix& c, double threshold = 0.0,
               bool inclusive = false);

// Edge-list text format: first line "n m", then m lines "u v"
// (whitespace-separated, 0-indexed).
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Adjacency-matrix CSV: n rows x n columns of 0/1, no header. Must be
// symmetric with a zero diagonal.
Graph parse_adjacency_csv(std::string_view text);

}  // namespace graphbounds
