#include "graphbounds/serialization.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "graphbounds/rng.hpp"

namespace graphbounds {

using nlohmann::json;

std::string format_double(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

namespace {

// infinities become the string "inf" so JSON stays valid
json json_real(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return value;
}

json metrics_json(const MetricsReport& r) {
    return json{{"n", r.n},
                {"m", r.m},
                {"min_degree", r.min_degree},
                {"density", json_real(r.density)},
                {"char_path_length", json_real(r.char_path_length)},
                {"diameter", json_real(r.diameter)},
                {"global_efficiency", json_real(r.global_efficiency)},
                {"local_efficiency_open", json_real(r.local_efficiency_open)},
                {"local_efficiency_closed", json_real(r.local_efficiency_closed)},
                {"clustering_open", json_real(r.clustering_open)},
                {"clustering_closed", json_real(r.clustering_closed)},
                {"frac_pairs_le2", json_real(r.frac_pairs_le2)}};
}

json bounds_json(const BoundsReport& b) {
    json checks = json::array();
    for (const auto& check : b.checks) {
        checks.push_back(json{{"name", check.name},
                              {"lhs", json_real(check.lhs)},
                              {"rhs", json_real(check.rhs)},
                              {"slack", json_real(check.slack)},
                              {"satisfied", check.satisfied},
                              {"applicable", check.applicable}});
    }
    return json{{"checks", checks},
                {"frac_pairs_le2", json_real(b.frac_pairs_le2)},
                {"gap_lemma6", json_real(b.gap_lemma6)},
                {"gap_bound_lemma6", json_real(b.gap_bound_lemma6)},
                {"tightness_diam_le2", b.tightness_diam_le2}};
}

}  // namespace

std::string metrics_to_json(const MetricsReport& r, int indent) {
    return metrics_json(r).dump(indent);
}

std::string bounds_to_json(const BoundsReport& b, int indent) {
    return bounds_json(b).dump(indent);
}

std::string analysis_to_json(const MetricsReport& r, const BoundsReport& b, int indent) {
    return json{{"metrics", metrics_json(r)}, {"bounds", bounds_json(b)}}.dump(indent);
}

namespace {

void append_check_columns(std::ostringstream& out, const BoundsReport& b, bool header) {
    for (const auto& check : b.checks) {
        if (header) {
            out << ",slack_" << check.name << ",satisfied_" << check.name;
        } else {
            out << ',' << format_double(check.slack) << ','
                << (check.applicable ? (check.satisfied ? "1" : "0") : "na");
        }
    }
}

}  // namespace

std::string analysis_csv_header() {
    std::ostringstream out;
    out << "n,m,density,L,E_glob,E_loc_open,E_loc_closed,CC_open,CC_closed,frac_pairs_le2";
    // check columns match the fixed evaluate_all ordering
    for (const char* name : {kCheckClosedEquality, kCheckOpenUpper, kCheckDensityUpper,
                             kCheckPathLower, kCheckGlobPathLower}) {
        out << ",slack_" << name << ",satisfied_" << name;
    }
    out << ",gap_lemma6,gap_bound_lemma6,tightness_diam_le2";
    return out.str();
}

std::string analysis_to_csv_row(const MetricsReport& r, const BoundsReport& b) {
    std::ostringstream out;
    out << r.n << ',' << r.m << ',' << format_double(r.density) << ','
        << format_double(r.char_path_length) << ',' << format_double(r.global_efficiency)
        << ',' << format_double(r.local_efficiency_open) << ','
        << format_double(r.local_efficiency_closed) << ',' << format_double(r.clustering_open)
        << ',' << format_double(r.clustering_closed) << ',' << format_double(r.frac_pairs_le2);
    append_check_columns(out, b, false);
    out << ',' << format_double(b.gap_lemma6) << ',' << format_double(b.gap_bound_lemma6)
        << ',' << (b.tightness_diam_le2 ? "1" : "0");
    return out.str();
}

std::string sweep_to_csv(const std::vector<SweepCell>& cells) {
    std::ostringstream out;
    out << "avg_degree,realization,seed,n,m,density,L,E_glob,E_loc_open,E_loc_closed,"
           "CC_open,CC_closed,frac_pairs_le2";
    for (const char* name : {kCheckClosedEquality, kCheckOpenUpper, kCheckDensityUpper,
                             kCheckPathLower, kCheckGlobPathLower}) {
        out << ",slack_" << name << ",satisfied_" << name;
    }
    out << ",status\n";
    for (const auto& cell : cells) {
        out << format_double(cell.avg_degree) << ',' << cell.realization << ',' << cell.seed;
        if (cell.ok) {
            const MetricsReport& r = cell.metrics;
            out << ',' << r.n << ',' << r.m << ',' << format_double(r.density) << ','
                << format_double(r.char_path_length) << ','
                << format_double(r.global_efficiency) << ','
                << format_double(r.local_efficiency_open) << ','
                << format_double(r.local_efficiency_closed) << ','
                << format_double(r.clustering_open) << ','
                << format_double(r.clustering_closed) << ','
                << format_double(r.frac_pairs_le2);
            append_check_columns(out, cell.bounds, false);
            out << ",ok\n";
        } else {
            out << ",,,,,,,,,,";
            for (int i = 0; i < 5; ++i) out << ",,";
            out << ",failed\n";
        }
    }
    return out.str();
}

std::string er_sidecar_json(int n, double p, std::uint64_t seed, const Graph& g) {
    return json{{"model", "er"},
                {"rng", kRngAlgorithm},
                {"seed", seed},
                {"params", json{{"n", n}, {"p", p}}},
                {"n", g.vertex_count()},
                {"m", g.edge_count()}}
        .dump(2);
}

std::string lfr_sidecar_json(const LfrParams& params, const Graph& g) {
    return json{{"model", "lfr"},
                {"rng", kRngAlgorithm},
                {"seed", params.seed},
                {"params", json{{"n", params.n},
                                {"tau_degree", params.tau_degree},
                                {"tau_community", params.tau_community},
                                {"avg_degree", params.avg_degree},
                                {"max_degree", params.max_degree},
                                {"mu", params.mu},
                                {"min_community", params.min_community},
                                {"max_community", params.max_community}}},
                {"n", g.vertex_count()},
                {"m", g.edge_count()}}
        .dump(2);
}

}  // namespace graphbounds
