// Command-line front end: analyze, gen, sweep, verify, binarize.
//
// Exit codes: 0 success, 1 input/usage errors, 2 a proved bound was violated
// (which would falsify a theorem and therefore indicates an implementation
// bug, not a data problem).

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphbounds/bounds.hpp"
#include "graphbounds/errors.hpp"
#include "graphbounds/generators.hpp"
#include "graphbounds/graph.hpp"
#include "graphbounds/ingest.hpp"
#include "graphbounds/metrics.hpp"
#include "graphbounds/serialization.hpp"
#include "graphbounds/verify.hpp"

namespace gb = graphbounds;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gb::Error("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gb::Error("cannot open '" + path + "' for writing");
    out << content;
}

void emit(const std::string& output_path, const std::string& content) {
    if (output_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
    } else {
        write_file(output_path, content);
    }
}

// Edge lists are the default; .csv selects the 0/1 adjacency-matrix format.
gb::Graph load_graph(const std::string& path) {
    const std::string text = read_file(path);
    if (std::filesystem::path(path).extension() == ".csv") {
        return gb::parse_adjacency_csv(text);
    }
    return gb::parse_edge_list(text);
}

int run_analysis(const gb::Graph& g, const std::string& format,
                 const std::string& output_path) {
    const gb::GraphAnalysis analysis = gb::analyze_graph(g);
    if (format == "csv") {
        emit(output_path, gb::analysis_csv_header() + "\n" +
                              gb::analysis_to_csv_row(analysis.metrics, analysis.bounds) +
                              "\n");
    } else {
        emit(output_path, gb::analysis_to_json(analysis.metrics, analysis.bounds) + "\n");
    }
    for (const auto& check : analysis.bounds.checks) {
        if (check.applicable && !check.satisfied) {
            std::cerr << "violated: " << check.name << " (slack " << check.slack << ")\n";
            return kExitViolation;
        }
    }
    return kExitOk;
}

int cmd_analyze(const std::string& input, const std::string& format,
                const std::string& output_path) {
    return run_analysis(load_graph(input), format, output_path);
}

int cmd_gen(const std::string& model, int n, double p, const gb::LfrParams& lfr_params,
            std::uint64_t seed, const std::string& output_path) {
    gb::Graph g;
    std::string sidecar;
    if (model == "er") {
        g = gb::erdos_renyi(n, p, seed);
        sidecar = gb::er_sidecar_json(n, p, seed, g);
    } else {
        gb::LfrParams params = lfr_params;
        params.seed = seed;
        g = gb::lfr(params);
        sidecar = gb::lfr_sidecar_json(params, g);
    }
    const std::string edge_list = gb::write_edge_list(g);
    if (output_path.empty()) {
        std::cout << edge_list;
    } else {
        write_file(output_path, edge_list);
        write_file(output_path + ".json", sidecar + "\n");
    }
    return kExitOk;
}

int cmd_sweep(const std::vector<double>& degrees, int realizations, int n, double mu,
              std::uint64_t seed, const std::string& output_path) {
    gb::SweepConfig config;
    config.degrees = degrees;
    config.realizations = realizations;
    config.base.n = n;
    config.base.mu = mu;
    config.master_seed = seed;
    const std::vector<gb::SweepCell> cells = gb::run_sweep(config);
    emit(output_path, gb::sweep_to_csv(cells));

    std::size_t failed = 0;
    for (const auto& cell : cells) {
        if (!cell.ok) ++failed;
    }
    std::ostringstream summary;
    summary << "cells: " << cells.size() << ", failed: " << failed << '\n';
    bool violated = false;
    for (const char* name :
         {gb::kCheckClosedEquality, gb::kCheckOpenUpper, gb::kCheckDensityUpper,
          gb::kCheckPathLower, gb::kCheckGlobPathLower}) {
        double max_abs_slack = 0.0;
        for (const auto& cell : cells) {
            if (!cell.ok) continue;
            const gb::BoundCheck* check = cell.bounds.find(name);
            if (check == nullptr || !check->applicable) continue;
            max_abs_slack = std::max(max_abs_slack, std::fabs(check->slack));
            violated = violated || !check->satisfied;
        }
        summary << "max |slack| " << name << ": " << gb::format_double(max_abs_slack)
                << '\n';
    }
    // smallest density beyond which every Lemma 6 gap stays below 1e-3
    std::vector<std::pair<double, double>> gaps;  // (density, gap)
    for (const auto& cell : cells) {
        if (cell.ok) gaps.emplace_back(cell.metrics.density, cell.bounds.gap_lemma6);
    }
    std::sort(gaps.begin(), gaps.end());
    std::optional<double> threshold;
    for (std::size_t i = gaps.size(); i-- > 0;) {
        if (gaps[i].second >= 1e-3) break;
        threshold = gaps[i].first;
    }
    if (threshold) {
        summary << "gap_lemma6 < 1e-3 for every graph with density >= "
                << gb::format_double(*threshold) << '\n';
    } else {
        summary << "gap_lemma6 < 1e-3 not reached at any density in this sweep\n";
    }
    std::cerr << summary.str();

    if (violated) return kExitViolation;
    if (!cells.empty() && failed == cells.size()) return kExitError;
    return kExitOk;
}

int cmd_verify(const std::string& mode, int max_n, int count, std::uint64_t seed,
               bool one_indexed) {
    gb::VerificationReport report;
    if (mode == "exhaustive") {
        report = gb::verify_exhaustive(max_n);
    } else {
        report = gb::verify_random(count, seed);
    }
    std::cout << "graphs checked: " << report.graphs_checked << '\n'
              << "violations: " << report.violations.size() << '\n';
    for (const auto& violation : report.violations) {
        std::cout << "violated " << violation.check << " (" << violation.detail
                  << ") on graph:\n";
        if (one_indexed) {
            const gb::Graph& g = violation.graph;
            std::cout << g.vertex_count() << ' ' << g.edge_count() << '\n';
            for (const auto& [u, v] : g.edges()) std::cout << u + 1 << ' ' << v + 1 << '\n';
        } else {
            std::cout << gb::write_edge_list(violation.graph);
        }
    }
    return report.ok() ? kExitOk : kExitViolation;
}

int cmd_binarize(const std::string& input, double threshold, bool inclusive,
                 const std::string& output_path, bool analyze,
                 const std::string& format) {
    if (threshold < -1.0 || threshold > 1.0) {
        throw gb::Error("threshold must lie in [-1, 1]");
    }
    const gb::CorrelationMatrix c = gb::parse_correlation_csv(read_file(input));
    const gb::Graph g = gb::binarize(c, threshold, inclusive);
    if (!output_path.empty()) {
        write_file(output_path, gb::write_edge_list(g));
    } else if (!analyze) {
        std::cout << gb::write_edge_list(g);
    }
    if (analyze) return run_analysis(g, format, "");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph metrics, proved-bound checks, benchmark sweeps"};
    app.require_subcommand(1);

    std::string input, output, format = "json";
    std::uint64_t seed = gb::kDefaultSeed;

    auto* analyze = app.add_subcommand(
        "analyze", "compute metrics and bound checks for a graph file");
    analyze->add_option("--input", input, "edge list, or adjacency CSV (.csv)")
        ->required();
    analyze->add_option("--output", output, "write report here instead of stdout");
    analyze->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string model = "er";
    int gen_n = 128;
    double gen_p = 0.5;
    gb::LfrParams lfr_params;
    auto* gen = app.add_subcommand("gen", "generate a random graph");
    gen->add_option("--model", model, "er|lfr")->check(CLI::IsMember({"er", "lfr"}));
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--p", gen_p, "er edge probability");
    gen->add_option("--avg-degree", lfr_params.avg_degree, "lfr target mean degree");
    gen->add_option("--mu", lfr_params.mu, "lfr inter-community mixing fraction");
    gen->add_option("--tau-degree", lfr_params.tau_degree, "lfr degree exponent");
    gen->add_option("--tau-community", lfr_params.tau_community,
                    "lfr community size exponent");
    gen->add_option("--max-degree", lfr_params.max_degree, "lfr degree cap (0 = n/2)");
    gen->add_option("--min-community", lfr_params.min_community,
                    "lfr smallest community (0 = auto)");
    gen->add_option("--max-community", lfr_params.max_community,
                    "lfr largest community (0 = n/2)");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--output", output, "edge-list path; a .json sidecar is written too");

    std::string degrees_spec = "4:64:4";
    int realizations = 5;
    int sweep_n = 128;
    double sweep_mu = 0.2;
    auto* sweep = app.add_subcommand("sweep", "benchmark sweep over average degrees");
    sweep->add_option("--degrees", degrees_spec,
                      "comma list and/or lo:hi:step ranges, e.g. 4:64:4 or 4,8,16");
    sweep->add_option("--realizations", realizations, "graphs per degree");
    sweep->add_option("--n", sweep_n, "vertex count");
    sweep->add_option("--mu", sweep_mu, "mixing fraction");
    sweep->add_option("--seed", seed, "master seed");
    sweep->add_option("--output", output, "CSV path (default stdout)");

    std::string mode = "exhaustive";
    int max_n = 6;
    int count = 10000;
    bool one_indexed = false;
    auto* verify = app.add_subcommand("verify", "run the soundness suites");
    verify->add_option("--mode", mode, "exhaustive|random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    verify->add_option("--max-n", max_n, "exhaustive vertex cap (<= 7)")
        ->check(CLI::Range(2, 7));
    verify->add_option("--count", count, "random graph count");
    verify->add_option("--seed", seed, "rng seed");
    verify->add_flag("--one-indexed", one_indexed,
                     "print violating graphs with 1-indexed vertices");

    double threshold = 0.0;
    bool inclusive = false;
    bool chain_analyze = false;
    auto* binarize = app.add_subcommand(
        "binarize", "threshold a correlation CSV into a graph");
    binarize->add_option("--input", input, "correlation CSV")->required();
    binarize->add_option("--threshold", threshold, "edge iff r > threshold (default 0)");
    binarize->add_flag("--inclusive", inclusive, "use >= instead of >");
    binarize->add_option("--output", output, "edge-list path");
    binarize->add_flag("--analyze", chain_analyze, "analyze the binarized graph");
    binarize->add_option("--format", format, "json|csv for --analyze")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(input, format, output);
        if (app.got_subcommand(gen)) {
            return cmd_gen(model, gen_n, gen_p, lfr_params, seed, output);
        }
        if (app.got_subcommand(sweep)) {
            std::vector<double> degrees;
            for (const auto& part : [&] {
                     std::vector<std::string> parts;
                     std::stringstream ss(degrees_spec);
                     std::string item;
                     while (std::getline(ss, item, ',')) parts.push_back(item);
                     return parts;
                 }()) {
                const auto colon = part.find(':');
                if (colon == std::string::npos) {
                    degrees.push_back(std::stod(part));
                } else {
                    const auto colon2 = part.find(':', colon + 1);
                    const double lo = std::stod(part.substr(0, colon));
                    const double hi = std::stod(part.substr(
                        colon + 1, colon2 == std::string::npos ? std::string::npos
                                                               : colon2 - colon - 1));
                    const double step =
                        colon2 == std::string::npos ? 1.0 : std::stod(part.substr(colon2 + 1));
                    if (step <= 0) throw gb::Error("degree range step must be positive");
                    for (double d = lo; d <= hi + 1e-9; d += step) degrees.push_back(d);
                }
            }
            return cmd_sweep(degrees, realizations, sweep_n, sweep_mu, seed, output);
        }
        if (app.got_subcommand(verify)) {
            return cmd_verify(mode, max_n, count, seed, one_indexed);
        }
        if (app.got_subcommand(binarize)) {
            return cmd_binarize(input, threshold, inclusive, output, chain_analyze, format);
        }
    } catch (const gb::ParseError& e) {
        std::cerr << "error: " << (input.empty() ? "" : input + ": ") << e.what() << '\n';
        return kExitError;
    } catch (const gb::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
