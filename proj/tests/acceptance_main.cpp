// Acceptance suite: one pass/fail line per criterion, each pinned to its
// stated tolerance. Exit code 0 iff every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphbounds/bounds.hpp"
#include "graphbounds/distances.hpp"
#include "graphbounds/generators.hpp"
#include "graphbounds/graph.hpp"
#include "graphbounds/metrics.hpp"
#include "graphbounds/rng.hpp"

namespace gb = graphbounds;
namespace fs = std::filesystem;

namespace {

constexpr double kTol = 1e-12;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int g_failures = 0;

void report(int number, const std::string& name, const Outcome& outcome,
            double seconds) {
    std::printf("%s  %d  %-28s %s(%.1fs)\n", outcome.pass ? "PASS" : "FAIL", number,
                name.c_str(), outcome.detail.empty() ? "" : (outcome.detail + " ").c_str(),
                seconds);
    std::fflush(stdout);
    if (!outcome.pass) ++g_failures;
}

template <typename F>
void criterion(int number, const std::string& name, F&& run) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = run();
    } catch (const std::exception& e) {
        outcome.pass = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    const auto seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, name, outcome, seconds);
}

template <typename PerGraph>
void enumerate_labeled_graphs(int n, PerGraph&& per_graph) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }
    const std::uint64_t total = 1ULL << slots.size();
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t bit = 0; bit < slots.size(); ++bit) {
            if (mask & (1ULL << bit)) edges.push_back(slots[bit]);
        }
        per_graph(gb::Graph::from_edge_list(n, edges));
    }
}

// Shared results across criteria 1-4: the exhaustive and randomized suites
// are walked once and each criterion's verdict is accumulated separately.
struct SuiteResults {
    // criterion 1
    std::uint64_t thm1_graphs = 0;
    double thm1_worst = 0.0;
    bool thm1_ok = true;
    // criterion 2
    std::uint64_t inequality_graphs = 0;
    std::uint64_t inequality_violations = 0;
    // criterion 3
    std::uint64_t tight_graphs = 0;
    double tight_worst = 0.0;
    bool tight_ok = true;
    // criterion 4
    std::uint64_t sandwich_graphs = 0;
    bool sandwich_ok = true;
    double sandwich_worst = 0.0;

    bool exhaustive_done = false;
    bool random_done = false;
};

SuiteResults g_suites;

void absorb_inequalities(const gb::GraphAnalysis& analysis, SuiteResults& r) {
    ++r.inequality_graphs;
    for (const char* name : {gb::kCheckOpenUpper, gb::kCheckDensityUpper,
                             gb::kCheckPathLower, gb::kCheckGlobPathLower}) {
        const gb::BoundCheck* check = analysis.bounds.find(name);
        if (check->applicable && check->slack < -kTol) ++r.inequality_violations;
    }
}

void absorb_sandwich(const gb::GraphAnalysis& analysis, SuiteResults& r) {
    ++r.sandwich_graphs;
    const double gap = analysis.bounds.gap_lemma6;
    const double bound = analysis.bounds.gap_bound_lemma6;
    if (gap < -kTol || gap > bound + kTol) r.sandwich_ok = false;
    r.sandwich_worst = std::max({r.sandwich_worst, -gap, gap - bound});
}

void absorb_tightness(const gb::GraphAnalysis& analysis, SuiteResults& r) {
    if (!analysis.bounds.tightness_diam_le2) return;
    ++r.tight_graphs;
    for (const char* name : {gb::kCheckDensityUpper, gb::kCheckPathLower,
                             gb::kCheckGlobPathLower}) {
        const gb::BoundCheck* check = analysis.bounds.find(name);
        if (!check->applicable) continue;
        r.tight_worst = std::max(r.tight_worst, std::fabs(check->slack));
        if (std::fabs(check->slack) > kTol) r.tight_ok = false;
    }
}

void run_exhaustive_suite() {
    if (g_suites.exhaustive_done) return;
    for (int n = 2; n <= 6; ++n) {
        enumerate_labeled_graphs(n, [&](const gb::Graph& g) {
            const gb::GraphAnalysis analysis = gb::analyze_graph(g);
            if (n == 6 && analysis.metrics.min_degree >= 1) {
                ++g_suites.thm1_graphs;
                const gb::BoundCheck* closed =
                    analysis.bounds.find(gb::kCheckClosedEquality);
                const double gap = std::fabs(closed->lhs - closed->rhs);
                g_suites.thm1_worst = std::max(g_suites.thm1_worst, gap);
                if (gap > kTol) g_suites.thm1_ok = false;
            }
            absorb_inequalities(analysis, g_suites);
            absorb_sandwich(analysis, g_suites);
        });
    }
    g_suites.exhaustive_done = true;
}

void run_random_suite() {
    if (g_suites.random_done) return;
    static constexpr double kGrid[] = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35,
                                       0.40, 0.45, 0.50, 0.55, 0.60, 0.65, 0.70,
                                       0.75, 0.80, 0.85, 0.90, 0.95};
    constexpr int kCount = 10000;
    for (int i = 0; i < kCount; ++i) {
        const double p = kGrid[i % std::size(kGrid)];
        const int n = 2 + i % 59;
        const std::uint64_t seed =
            gb::splitmix64(gb::splitmix64(20240601) ^ static_cast<std::uint64_t>(i));
        const gb::Graph g = gb::erdos_renyi(n, p, seed);
        const gb::GraphAnalysis analysis = gb::analyze_graph(g);
        absorb_inequalities(analysis, g_suites);
        absorb_sandwich(analysis, g_suites);
        absorb_tightness(analysis, g_suites);
    }
    g_suites.random_done = true;
}

std::string format_count(std::uint64_t count) {
    std::ostringstream out;
    out << count;
    return out.str();
}

// ---- criterion runners ----

Outcome criterion1() {
    run_exhaustive_suite();
    Outcome outcome;
    outcome.pass = g_suites.thm1_ok && g_suites.thm1_graphs > 0;
    std::ostringstream detail;
    detail << g_suites.thm1_graphs << " graphs, worst |slack| " << g_suites.thm1_worst;
    outcome.detail = detail.str();
    return outcome;
}

Outcome criterion2() {
    run_exhaustive_suite();
    run_random_suite();
    Outcome outcome;
    outcome.pass = g_suites.inequality_violations == 0;
    outcome.detail = format_count(g_suites.inequality_graphs) + " graphs, " +
                     format_count(g_suites.inequality_violations) + " violations";
    return outcome;
}

Outcome criterion3() {
    run_random_suite();
    Outcome outcome;
    outcome.pass = g_suites.tight_ok && g_suites.tight_graphs > 0;
    std::ostringstream detail;
    detail << g_suites.tight_graphs << " diam<=2 graphs, worst |slack| "
           << g_suites.tight_worst;
    outcome.detail = detail.str();
    return outcome;
}

Outcome criterion4() {
    run_exhaustive_suite();
    run_random_suite();
    Outcome outcome;
    outcome.pass = g_suites.sandwich_ok;
    std::ostringstream detail;
    detail << g_suites.sandwich_graphs << " graphs, worst excess "
           << g_suites.sandwich_worst;
    outcome.detail = detail.str();
    return outcome;
}

Outcome criterion5() {
    gb::SweepConfig config;
    for (int d = 4; d <= 64; d += 4) config.degrees.push_back(d);
    config.realizations = 5;
    config.base.n = 128;
    config.base.mu = 0.2;
    config.master_seed = 42;
    const auto cells = gb::run_sweep(config);

    Outcome outcome;
    std::map<double, std::pair<double, int>> gap_by_degree;  // degree -> (sum, count)
    int failed_cells = 0;
    int violations = 0;
    bool dense_gaps_ok = true;
    for (const auto& cell : cells) {
        if (!cell.ok) {
            ++failed_cells;
            continue;
        }
        for (const auto& check : cell.bounds.checks) {
            if (check.applicable && !check.satisfied) ++violations;
        }
        auto& [sum, count] = gap_by_degree[cell.avg_degree];
        sum += cell.bounds.gap_lemma6;
        ++count;
        if (cell.metrics.density > 0.85 && cell.bounds.gap_lemma6 >= 1e-3) {
            dense_gaps_ok = false;
        }
    }
    const auto mean_gap = [&](double degree) {
        const auto& [sum, count] = gap_by_degree.at(degree);
        return sum / count;
    };
    const bool trend_ok =
        !gap_by_degree.empty() &&
        mean_gap(config.degrees.back()) < mean_gap(config.degrees.front());
    outcome.pass =
        failed_cells == 0 && violations == 0 && trend_ok && dense_gaps_ok;
    std::ostringstream detail;
    detail << cells.size() << " cells, " << failed_cells << " failed, " << violations
           << " violations; mean gap " << mean_gap(config.degrees.front()) << " @d=4 -> "
           << mean_gap(config.degrees.back()) << " @d=64";
    outcome.detail = detail.str();
    return outcome;
}

Outcome criterion6() {
    const double reported_density = 0.483;
    const double reported_efficiency = 0.741;
    const double bound = 0.5 * (1.0 + reported_density);
    Outcome outcome;
    outcome.pass = std::fabs(bound - 0.7415) <= kTol &&
                   std::fabs(bound - reported_efficiency) <= 5e-4 + kTol &&
                   reported_efficiency <= bound + kTol;
    std::ostringstream detail;
    detail << "(1+0.483)/2 = " << bound << " vs reported 0.741";
    outcome.detail = detail.str();
    return outcome;
}

Outcome criterion7() {
    gb::Rng rng(5150);
    int mismatches = 0;
    for (int i = 0; i < 500; ++i) {
        const int n = 2 + static_cast<int>(rng.next_below(49));
        const gb::Graph g = gb::erdos_renyi(n, rng.next_unit(), rng.next_u64());
        if (gb::all_pairs_distances(g) != gb::oracle_distances(g)) ++mismatches;
    }
    Outcome outcome;
    outcome.pass = mismatches == 0;
    outcome.detail = "500 graphs, " + std::to_string(mismatches) + " mismatches";
    return outcome;
}

Outcome criterion8() {
    const auto fixtures = nlohmann::json::parse([] {
        std::ifstream in(std::string(GRAPHBOUNDS_FIXTURES_DIR) + "/hand_computed.json");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }());
    const auto get = [&](const std::string& name) -> const nlohmann::json& {
        for (const auto& entry : fixtures) {
            if (entry.at("name") == name) return entry;
        }
        throw std::runtime_error("missing fixture " + name);
    };
    const auto rational = [](const nlohmann::json& field) {
        return field.at("num").get<double>() / field.at("den").get<double>();
    };
    const auto graph_of = [](const nlohmann::json& entry) {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : entry.at("edges")) edges.emplace_back(e.at(0), e.at(1));
        return gb::Graph::from_edge_list(entry.at("n").get<int>(), edges);
    };

    double worst = 0.0;
    const auto check = [&](double actual, double expected) {
        worst = std::max(worst, std::fabs(actual - expected));
    };

    {
        const auto& p3 = get("P3");
        const gb::MetricsReport r = gb::compute_all(graph_of(p3));
        check(r.char_path_length, 4.0 / 3.0);
        check(r.global_efficiency, 5.0 / 6.0);
        check(r.clustering_open, 0.0);
        check(r.clustering_closed, 8.0 / 9.0);
        check(r.local_efficiency_closed, 17.0 / 18.0);
        check(r.char_path_length, rational(p3.at("char_path_length")));
        check(r.global_efficiency, rational(p3.at("global_efficiency")));
        check(r.clustering_closed, rational(p3.at("clustering_closed")));
        check(r.local_efficiency_closed, rational(p3.at("local_efficiency_closed")));
    }
    {
        const auto& c4 = get("C4");
        const gb::GraphAnalysis a = gb::analyze_graph(graph_of(c4));
        check(a.metrics.char_path_length, 4.0 / 3.0);
        check(a.metrics.global_efficiency, 5.0 / 6.0);
        check(a.metrics.density, 2.0 / 3.0);
        for (const char* name : {gb::kCheckDensityUpper, gb::kCheckPathLower,
                                 gb::kCheckGlobPathLower}) {
            check(a.bounds.find(name)->slack, 0.0);
        }
    }
    {
        const auto& p4 = get("P4");
        const gb::MetricsReport r = gb::compute_all(graph_of(p4));
        check(r.global_efficiency, 13.0 / 18.0);
        check(r.char_path_length, 5.0 / 3.0);
        check(r.frac_pairs_le2, 5.0 / 6.0);
        check(r.global_efficiency, rational(p4.at("global_efficiency")));
    }

    Outcome outcome;
    outcome.pass = worst <= kTol;
    std::ostringstream detail;
    detail << "worst deviation " << worst;
    outcome.detail = detail.str();
    return outcome;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Outcome criterion9() {
    const fs::path dir = fs::temp_directory_path() / "graphbounds_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string cli = GRAPHBOUNDS_CLI_PATH;

    struct Variant {
        const char* threads;
        const char* tag;
    };
    const Variant variants[] = {{"1", "t1a"}, {"1", "t1b"}, {"8", "t8"}};

    std::vector<std::string> sweeps, gens, sidecars;
    for (const auto& [threads, tag] : variants) {
        const fs::path sweep_out = dir / (std::string("sweep_") + tag + ".csv");
        const fs::path gen_out = dir / (std::string("gen_") + tag + ".txt");
        const std::string env = std::string("GRAPHBOUNDS_THREADS=") + threads + " ";
        const std::string quiet = " > /dev/null 2>&1";
        if (std::system((env + cli +
                         " sweep --degrees 4:16:4 --realizations 2 --n 64 --seed 123"
                         " --output " +
                         sweep_out.string() + quiet)
                            .c_str()) != 0) {
            return {false, "sweep invocation failed"};
        }
        if (std::system((env + cli + " gen --model lfr --n 64 --avg-degree 8 --seed 9 --output " +
                         gen_out.string() + quiet)
                            .c_str()) != 0) {
            return {false, "gen invocation failed"};
        }
        sweeps.push_back(slurp(sweep_out));
        gens.push_back(slurp(gen_out));
        sidecars.push_back(slurp(gen_out.string() + ".json"));
    }
    Outcome outcome;
    outcome.pass = !sweeps[0].empty() && sweeps[0] == sweeps[1] && sweeps[0] == sweeps[2] &&
                   !gens[0].empty() && gens[0] == gens[1] && gens[0] == gens[2] &&
                   !sidecars[0].empty() && sidecars[0] == sidecars[1] &&
                   sidecars[0] == sidecars[2];
    outcome.detail = outcome.pass ? "byte-identical across runs and thread counts"
                                  : "outputs differ";
    return outcome;
}

}  // namespace

int main() {
    criterion(1, "thm1-closed-equality-n6", criterion1);
    criterion(2, "inequalities-exhaustive+er", criterion2);
    criterion(3, "corollary-tightness-diam2", criterion3);
    criterion(4, "thm9-gap-sandwich", criterion4);
    criterion(5, "lfr-sweep-reproduction", criterion5);
    criterion(6, "paper-spot-check", criterion6);
    criterion(7, "bfs-oracle-equivalence", criterion7);
    criterion(8, "hand-computed-fixtures", criterion8);
    criterion(9, "cli-determinism", criterion9);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
