#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graphbounds/distances.hpp"
#include "graphbounds/graph.hpp"
#include "graphbounds/metrics.hpp"

namespace graphbounds {

// Equality/inequality tolerance for every check below. All quantities are
// short sums of reciprocals of small integers, so double-precision error sits
// orders of magnitude below this.
inline constexpr double kBoundTolerance = 1e-12;

// Stable check identifiers, frozen in the JSON schema.
inline constexpr const char* kCheckClosedEquality = "thm1_closed_equality";
inline constexpr const char* kCheckOpenUpper = "thm3_open_upper";
inline constexpr const char* kCheckDensityUpper = "lemma6_density_upper";
inline constexpr const char* kCheckPathLower = "lemma7_path_lower";
inline constexpr const char* kCheckGlobPathLower = "thm8_glob_path_lower";

// One evaluated relationship. slack is rhs - lhs for upper bounds, lhs - rhs
// for lower bounds, and -|lhs - rhs| for the closed equality, so that
// satisfied <=> slack >= -kBoundTolerance uniformly. When applicable is false
// (a side is infinite or a precondition fails) slack is 0 and satisfied true;
// inapplicable is not violated.
struct BoundCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool satisfied = true;
    bool applicable = true;
};

struct BoundsReport {
    std::vector<BoundCheck> checks;
    double frac_pairs_le2 = 0.0;
    double gap_lemma6 = 0.0;        // (1 + D)/2 - E_glob
    double gap_bound_lemma6 = 0.0;  // (1 - frac_pairs_le2)/2
    bool tightness_diam_le2 = false;

    const BoundCheck* find(const std::string& name) const;
};

// E_loc_closed == (1 + CC_closed)/2; applicable only when min degree >= 1.
BoundCheck check_closed_equality(const MetricsReport& r);

// E_loc_open <= (1 + CC_open)/2.
BoundCheck check_open_upper(const MetricsReport& r);

// E_glob <= (1 + D)/2.
BoundCheck check_density_upper(const MetricsReport& r);

// L >= 2 - D; applicable only when the graph is connected.
BoundCheck check_path_lower(const MetricsReport& r);

// E_glob >= (3 - L)/2; applicable only when the graph is connected.
BoundCheck check_glob_path_lower(const MetricsReport& r);

// Returns (gap, gap_bound) with gap = (1 + D)/2 - E_glob and
// gap_bound = (pairs_gt2_finite + pairs_inf) / (2 n(n-1)).
// 0 <= gap <= gap_bound holds on every graph.
std::pair<double, double> convergence_diagnostics(const MetricsReport& r,
                                                  const PairDistanceSummary& s);

// Runs all five checks plus the diagnostics.
BoundsReport evaluate_all(const MetricsReport& r, const PairDistanceSummary& s);

// Convenience overload; computes metrics internally. Throws TooFewVertices
// when n < 2.
BoundsReport evaluate_all(const Graph& g);

// One-pass analysis used by the CLI and the sweep: distance matrix computed
// once, shared by the metrics and the bound checks.
struct GraphAnalysis {
    MetricsReport metrics;
    PairDistanceSummary summary;
    BoundsReport bounds;
};

GraphAnalysis analyze_graph(const Graph& g);

}  // namespace graphbounds
