#include "graphbounds/bounds.hpp"

#include <cmath>

#include "graphbounds/errors.hpp"

namespace graphbounds {

const BoundCheck* BoundsReport::find(const std::string& name) const {
    for (const auto& check : checks) {
        if (check.name == name) return &check;
    }
    return nullptr;
}

namespace {

BoundCheck inapplicable(const char* name, double lhs, double rhs) {
    BoundCheck check;
    check.name = name;
    check.lhs = lhs;
    check.rhs = rhs;
    check.slack = 0.0;
    check.satisfied = true;
    check.applicable = false;
    return check;
}

BoundCheck upper_bound(const char* name, double lhs, double rhs) {
    BoundCheck check;
    check.name = name;
    check.lhs = lhs;
    check.rhs = rhs;
    check.slack = rhs - lhs;
    check.satisfied = check.slack >= -kBoundTolerance;
    check.applicable = true;
    return check;
}

BoundCheck lower_bound(const char* name, double lhs, double rhs) {
    BoundCheck check;
    check.name = name;
    check.lhs = lhs;
    check.rhs = rhs;
    check.slack = lhs - rhs;
    check.satisfied = check.slack >= -kBoundTolerance;
    check.applicable = true;
    return check;
}

BoundCheck equality(const char* name, double lhs, double rhs) {
    BoundCheck check;
    check.name = name;
    check.lhs = lhs;
    check.rhs = rhs;
    check.slack = -std::fabs(lhs - rhs);
    check.satisfied = check.slack >= -kBoundTolerance;
    check.applicable = true;
    return check;
}

bool connected(const MetricsReport& r) { return std::isfinite(r.char_path_length); }

}  // namespace

BoundCheck check_closed_equality(const MetricsReport& r) {
    const double rhs = 0.5 * (1.0 + r.clustering_closed);
    if (r.min_degree < 1) return inapplicable(kCheckClosedEquality, r.local_efficiency_closed, rhs);
    return equality(kCheckClosedEquality, r.local_efficiency_closed, rhs);
}

BoundCheck check_open_upper(const MetricsReport& r) {
    return upper_bound(kCheckOpenUpper, r.local_efficiency_open,
                       0.5 * (1.0 + r.clustering_open));
}

BoundCheck check_density_upper(const MetricsReport& r) {
    return upper_bound(kCheckDensityUpper, r.global_efficiency, 0.5 * (1.0 + r.density));
}

BoundCheck check_path_lower(const MetricsReport& r) {
    const double rhs = 2.0 - r.density;
    if (!connected(r)) return inapplicable(kCheckPathLower, r.char_path_length, rhs);
    return lower_bound(kCheckPathLower, r.char_path_length, rhs);
}

BoundCheck check_glob_path_lower(const MetricsReport& r) {
    if (!connected(r)) {
        return inapplicable(kCheckGlobPathLower, r.global_efficiency, -kInfinite);
    }
    return lower_bound(kCheckGlobPathLower, r.global_efficiency,
                       0.5 * (3.0 - r.char_path_length));
}

std::pair<double, double> convergence_diagnostics(const MetricsReport& r,
                                                  const PairDistanceSummary& s) {
    const double pairs = static_cast<double>(r.n) * static_cast<double>(r.n - 1);
    const double gap = 0.5 * (1.0 + r.density) - r.global_efficiency;
    const double gap_bound =
        static_cast<double>(s.pairs_gt2_finite + s.pairs_inf) / (2.0 * pairs);
    return {gap, gap_bound};
}

BoundsReport evaluate_all(const MetricsReport& r, const PairDistanceSummary& s) {
    BoundsReport report;
    report.checks.push_back(check_closed_equality(r));
    report.checks.push_back(check_open_upper(r));
    report.checks.push_back(check_density_upper(r));
    report.checks.push_back(check_path_lower(r));
    report.checks.push_back(check_glob_path_lower(r));
    report.frac_pairs_le2 = r.frac_pairs_le2;
    const auto [gap, gap_bound] = convergence_diagnostics(r, s);
    report.gap_lemma6 = gap;
    report.gap_bound_lemma6 = gap_bound;
    report.tightness_diam_le2 = std::isfinite(r.diameter) && r.diameter <= 2.0;
    return report;
}

BoundsReport evaluate_all(const Graph& g) {
    if (g.vertex_count() < 2) {
        throw TooFewVertices("bound checks need at least 2 vertices");
    }
    const DistanceMatrix d = all_pairs_distances(g);
    const PairDistanceSummary s = distance_distribution(d);
    return evaluate_all(compute_all(g, d, s), s);
}

GraphAnalysis analyze_graph(const Graph& g) {
    if (g.vertex_count() < 2) {
        throw TooFewVertices("analysis needs at least 2 vertices");
    }
    GraphAnalysis result;
    const DistanceMatrix d = all_pairs_distances(g);
    result.summary = distance_distribution(d);
    result.metrics = compute_all(g, d, result.summary);
    result.bounds = evaluate_all(result.metrics, result.summary);
    return result;
}

}  // namespace graphbounds
