#pragma once

#include <string>
#include <vector>

#include "graphbounds/bounds.hpp"
#include "graphbounds/generators.hpp"
#include "graphbounds/metrics.hpp"

namespace graphbounds {

// JSON conventions: flat snake_case keys; infinite values serialize as the
// string "inf". CSV uses '.' as decimal separator, no locale dependence.

std::string metrics_to_json(const MetricsReport& r, int indent = 2);
std::string bounds_to_json(const BoundsReport& b, int indent = 2);

// Combined {"metrics": ..., "bounds": ...} document emitted by `analyze`.
std::string analysis_to_json(const MetricsReport& r, const BoundsReport& b,
                             int indent = 2);

std::string analysis_csv_header();
std::string analysis_to_csv_row(const MetricsReport& r, const BoundsReport& b);

// Sweep CSV: header plus one row per cell, columns
// avg_degree,realization,seed,n,m,density,L,E_glob,E_loc_open,E_loc_closed,
// CC_open,CC_closed,frac_pairs_le2,(slack_*,satisfied_*) per check,status.
std::string sweep_to_csv(const std::vector<SweepCell>& cells);

// Sidecar metadata written next to generated graph files.
std::string er_sidecar_json(int n, double p, std::uint64_t seed, const Graph& g);
std::string lfr_sidecar_json(const LfrParams& params, const Graph& g);

// Locale-independent shortest round-trip formatting ("inf" for infinities).
std::string format_double(double value);

}  // namespace graphbounds
