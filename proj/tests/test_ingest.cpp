#include <doctest.h>

#include <string>

#include "graphbounds/errors.hpp"
#include "graphbounds/generators.hpp"
#include "graphbounds/ingest.hpp"
#include "graphbounds/rng.hpp"
#include "test_support.hpp"

using namespace graphbounds;

TEST_SUITE("ingest") {

TEST_CASE("correlation csv parses a plain matrix") {
    const CorrelationMatrix c = parse_correlation_csv("1,0.5,0.2\n0.5,1,-0.3\n0.2,-0.3,1\n");
    CHECK(c.n == 3);
    CHECK(c.labels.empty());
    CHECK(c.at(0, 1) == 0.5);
    CHECK(c.at(1, 2) == -0.3);
}

TEST_CASE("correlation csv accepts a header row of labels") {
    const CorrelationMatrix c =
        parse_correlation_csv("insula,acc\n1,0.4\n0.4,1\n");
    CHECK(c.n == 2);
    REQUIRE(c.labels.size() == 2);
    CHECK(c.labels[0] == "insula");
    CHECK(c.labels[1] == "acc");
}

TEST_CASE("correlation csv rejections") {
    CHECK_THROWS_AS(parse_correlation_csv("1,1.7\n1.7,1\n"), OutOfRangeEntry);
    CHECK_THROWS_AS(parse_correlation_csv("1,0.5,0.1\n0.5,1,0.2\n"), NotSquare);
    CHECK_THROWS_AS(parse_correlation_csv("1,nan\nnan,1\n"), OutOfRangeEntry);
    CHECK_THROWS_AS(parse_correlation_csv("1,0.5\n0.499,1\n"), AsymmetryTooLarge);
    CHECK_THROWS_AS(parse_correlation_csv("0.2,0.5\n0.5,1\n"), OutOfRangeEntry);
}

TEST_CASE("tiny asymmetries are repaired by averaging") {
    const CorrelationMatrix c = parse_correlation_csv("1,0.5000001\n0.4999999,1\n");
    CHECK(c.at(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(c.at(0, 1) == c.at(1, 0));
}

TEST_CASE("binarize") {
    const CorrelationMatrix positive =
        parse_correlation_csv("1,0.3,0.3\n0.3,1,0.3\n0.3,0.3,1\n");
    CHECK(binarize(positive, 0.0) == gbtest::make_complete(3));

    const CorrelationMatrix negative =
        parse_correlation_csv("1,-0.2,-0.2\n-0.2,1,-0.2\n-0.2,-0.2,1\n");
    CHECK(binarize(negative, 0.0).edge_count() == 0);

    // an exact-zero correlation is not an edge under the strict default
    const CorrelationMatrix mixed =
        parse_correlation_csv("1,0,0.4\n0,1,-0.1\n0.4,-0.1,1\n");
    const Graph strict = binarize(mixed, 0.0);
    CHECK_FALSE(strict.has_edge(0, 1));
    CHECK(strict.has_edge(0, 2));
    const Graph inclusive = binarize(mixed, 0.0, true);
    CHECK(inclusive.has_edge(0, 1));
}

TEST_CASE("binarize endpoints and monotonicity in the threshold") {
    const CorrelationMatrix c =
        parse_correlation_csv("1,0.9,-0.5\n0.9,1,0.1\n-0.5,0.1,1\n");
    CHECK(binarize(c, -1.0) == gbtest::make_complete(3));  // all entries > -1
    CHECK(binarize(c, 1.0).edge_count() == 0);
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const double a = 2.0 * rng.next_unit() - 1.0;
        const double b = 2.0 * rng.next_unit() - 1.0;
        const double lo = std::min(a, b), hi = std::max(a, b);
        const Graph loose = binarize(c, lo);
        const Graph tight = binarize(c, hi);
        for (const auto& [u, v] : tight.edges()) CHECK(loose.has_edge(u, v));
    }
}

TEST_CASE("edge list parsing") {
    const Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK(p3 == gbtest::make_path(3));
    CHECK_THROWS_AS(parse_edge_list(""), MalformedLine);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1\n"), MalformedLine);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), MalformedLine);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), MalformedLine);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), IndexOutOfRange);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), SelfLoop);
}

TEST_CASE("edge list round-trips") {
    Rng rng(29);
    for (int i = 0; i < 40; ++i) {
        const int n = 1 + static_cast<int>(rng.next_below(30));
        const Graph g = erdos_renyi(n, rng.next_unit(), rng.next_u64());
        CHECK(parse_edge_list(write_edge_list(g)) == g);
    }
}

TEST_CASE("adjacency csv parsing") {
    const Graph p3 = parse_adjacency_csv("0,1,0\n1,0,1\n0,1,0\n");
    CHECK(p3 == gbtest::make_path(3));
    CHECK_THROWS_AS(parse_adjacency_csv("1,1\n1,0\n"), SelfLoopEntry);
    CHECK_THROWS_AS(parse_adjacency_csv("0,1\n0,0\n"), AsymmetricAdjacency);
    CHECK_THROWS_AS(parse_adjacency_csv("0,2\n2,0\n"), NonBinaryEntry);
    CHECK_THROWS_AS(parse_adjacency_csv("0,1,0\n1,0\n"), MalformedLine);
}

}  // TEST_SUITE
