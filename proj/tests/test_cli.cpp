#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "graphbounds/ingest.hpp"
#include "schema_check.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "graphbounds_cli_tests";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;
    const std::string command = std::string(GRAPHBOUNDS_CLI_PATH) + " " + args + " > " +
                                out.string() + " 2> " + err.string();
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = gbtest::read_file(out.string());
    result.err = gbtest::read_file(err.string());
    return result;
}

std::string write_scratch(const std::string& name, const std::string& content) {
    const fs::path path = scratch_dir() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze emits schema-valid json and exit 0 on C4") {
    const std::string input = write_scratch("c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    const CliResult result = run_cli("analyze --input " + input);
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc.at("metrics").at("density").get<double>() ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    for (const auto& check : doc.at("bounds").at("checks")) {
        CHECK(check.at("satisfied") == true);
    }
    const auto schema = nlohmann::json::parse(
        gbtest::read_file(std::string(GRAPHBOUNDS_SCHEMAS_DIR) + "/analyze.schema.json"));
    std::string why;
    CHECK(gbtest::SchemaChecker(schema).validate(doc, &why));
    CAPTURE(why);
}

TEST_CASE("analyze on K5 reports unit path length and efficiency") {
    std::string edges = "5 10\n";
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            edges += std::to_string(i) + " " + std::to_string(j) + "\n";
        }
    }
    const std::string input = write_scratch("k5.txt", edges);
    const CliResult result = run_cli("analyze --input " + input);
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc.at("metrics").at("char_path_length") == 1.0);
    CHECK(doc.at("metrics").at("global_efficiency") == 1.0);
}

TEST_CASE("analyze reads adjacency csv input") {
    const std::string input = write_scratch("p3.csv", "0,1,0\n1,0,1\n0,1,0\n");
    const CliResult result = run_cli("analyze --input " + input);
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc.at("metrics").at("n") == 3);
    CHECK(doc.at("metrics").at("m") == 2);
}

TEST_CASE("analyze csv format emits header plus one row") {
    const std::string input = write_scratch("c4b.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    const CliResult result = run_cli("analyze --input " + input + " --format csv");
    REQUIRE(result.exit_code == 0);
    CHECK(std::count(result.out.begin(), result.out.end(), '\n') == 2);
    CHECK(result.out.rfind("n,m,density,", 0) == 0);
}

TEST_CASE("analyze rejects malformed input with exit 1") {
    const std::string input = write_scratch("broken.txt", "this is not a graph\n");
    const CliResult result = run_cli("analyze --input " + input);
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("error") != std::string::npos);
}

TEST_CASE("analyze of a missing file exits 1") {
    CHECK(run_cli("analyze --input /nonexistent/graph.txt").exit_code == 1);
}

TEST_CASE("gen er p=1 produces the complete graph") {
    const fs::path out = scratch_dir() / "k10.txt";
    const CliResult result =
        run_cli("gen --model er --n 10 --p 1 --output " + out.string());
    REQUIRE(result.exit_code == 0);
    const auto g = graphbounds::parse_edge_list(gbtest::read_file(out.string()));
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 45);
    const auto sidecar = nlohmann::json::parse(gbtest::read_file(out.string() + ".json"));
    CHECK(sidecar.at("model") == "er");
    CHECK(sidecar.at("rng") == "mt19937_64");
}

TEST_CASE("gen lfr twice is byte-identical") {
    const fs::path a = scratch_dir() / "lfr_a.txt";
    const fs::path b = scratch_dir() / "lfr_b.txt";
    REQUIRE(run_cli("gen --model lfr --seed 9 --output " + a.string()).exit_code == 0);
    REQUIRE(run_cli("gen --model lfr --seed 9 --output " + b.string()).exit_code == 0);
    CHECK(gbtest::read_file(a.string()) == gbtest::read_file(b.string()));
    CHECK(gbtest::read_file(a.string() + ".json") == gbtest::read_file(b.string() + ".json"));
}

TEST_CASE("gen rejects invalid probability with exit 1") {
    CHECK(run_cli("gen --model er --n 10 --p 1.5").exit_code == 1);
}

TEST_CASE("binarize an all-positive matrix yields K5") {
    std::string csv;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) csv += (i == j ? "1" : "0.4") + std::string(j < 4 ? "," : "\n");
    }
    const std::string input = write_scratch("corr5.csv", csv);
    const fs::path out = scratch_dir() / "k5_bin.txt";
    REQUIRE(run_cli("binarize --input " + input + " --output " + out.string()).exit_code == 0);
    const auto g = graphbounds::parse_edge_list(gbtest::read_file(out.string()));
    CHECK(g.edge_count() == 10);

    // threshold 1 keeps nothing under the strict rule
    const fs::path empty_out = scratch_dir() / "empty_bin.txt";
    REQUIRE(run_cli("binarize --input " + input + " --threshold 1 --output " +
                    empty_out.string())
                .exit_code == 0);
    CHECK(graphbounds::parse_edge_list(gbtest::read_file(empty_out.string())).edge_count() == 0);
}

TEST_CASE("binarize --analyze chains into the bounds report") {
    std::string csv;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) csv += (i == j ? "1" : "0.4") + std::string(j < 4 ? "," : "\n");
    }
    const std::string input = write_scratch("corr5b.csv", csv);
    const CliResult result = run_cli("binarize --input " + input + " --analyze");
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    // K5 has diameter 1: every global bound is tight
    CHECK(doc.at("bounds").at("tightness_diam_le2") == true);
    for (const auto& check : doc.at("bounds").at("checks")) {
        if (check.at("applicable") == true) {
            CHECK(std::fabs(check.at("slack").get<double>()) <= 1e-12);
        }
    }
}

TEST_CASE("binarize rejects an out-of-range threshold") {
    const std::string input = write_scratch("corr2.csv", "1,0.5\n0.5,1\n");
    CHECK(run_cli("binarize --input " + input + " --threshold 2").exit_code == 1);
}

TEST_CASE("verify exhaustive n<=5 passes") {
    const CliResult result = run_cli("verify --mode exhaustive --max-n 5");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("violations: 0") != std::string::npos);
}

TEST_CASE("verify random sample passes") {
    const CliResult result = run_cli("verify --mode random --count 200 --seed 5");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("graphs checked: 200") != std::string::npos);
}

TEST_CASE("sweep single cell emits one data row") {
    const fs::path out = scratch_dir() / "sweep1.csv";
    const CliResult result = run_cli(
        "sweep --degrees 8 --realizations 1 --n 64 --seed 3 --output " + out.string());
    REQUIRE(result.exit_code == 0);
    const std::string csv = gbtest::read_file(out.string());
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
    CHECK(result.err.find("cells: 1, failed: 0") != std::string::npos);
}

TEST_CASE("sweep degree ranges expand") {
    const fs::path out = scratch_dir() / "sweep2.csv";
    const CliResult result = run_cli(
        "sweep --degrees 4:12:4 --realizations 2 --n 64 --seed 3 --output " + out.string());
    REQUIRE(result.exit_code == 0);
    const std::string csv = gbtest::read_file(out.string());
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 3 * 2);
}

}  // TEST_SUITE
