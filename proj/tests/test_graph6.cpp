#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hamlab/graph.hpp"
#include "hamlab/graph6.hpp"
#include "test_support.hpp"

using namespace hamlab;

TEST_CASE("known encodings") {
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(Graph(2)) == "A?");
    CHECK(emit_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(emit_graph6(Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
    CHECK(emit_graph6(Graph::from_edges(5, {{0, 2}, {1, 3}, {0, 4}, {3, 4}})) == "DQc");

    const Graph c5 = parse_graph6("Dhc");
    CHECK(c5.order() == 5);
    CHECK(c5.size() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
}

TEST_CASE("round trip over every labeled graph up to order 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : oracle::labeled_graphs_bf(n)) {
            const std::string code = emit_graph6(g);
            CHECK(parse_graph6(code) == g);
            // independent mini-decoder agrees
            const auto decoded = oracle::decode_graph6_mini(code);
            REQUIRE(decoded.has_value());
            CHECK(decoded->first == n);
            std::set<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (g.has_edge(u, v)) edges.insert({u, v});
            CHECK(decoded->second == edges);
        }
    }
}

TEST_CASE("input tolerates marker and whitespace") {
    CHECK(parse_graph6(">>graph6<<A_") == Graph::from_edges(2, {{0, 1}}));
    CHECK(parse_graph6("  A_\n") == Graph::from_edges(2, {{0, 1}}));
    CHECK(parse_graph6("\t>>graph6<<@ ") == Graph(1));
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("~??"), Graph6Error);      // long form unsupported
    CHECK_THROWS_AS(parse_graph6("D"), Graph6Error);        // truncated payload
    CHECK_THROWS_AS(parse_graph6("DQ"), Graph6Error);       // still truncated
    CHECK_THROWS_AS(parse_graph6("A_X"), Graph6Error);      // trailing garbage
    CHECK_THROWS_AS(parse_graph6("A_ A_"), Graph6Error);    // two codes on one line
    CHECK_THROWS_AS(parse_graph6("\x1f"), Graph6Error);     // header below range
    CHECK_THROWS_AS(parse_graph6(std::string("A") + char(0x1f)), Graph6Error);
    CHECK_THROWS_AS(parse_graph6(std::string("A") + char(0x7f)), Graph6Error);
}

TEST_CASE("emit refuses orders beyond the short form") {
    CHECK_THROWS_AS(emit_graph6(Graph(63)), Graph6Error);
    CHECK(parse_graph6(emit_graph6(Graph(62))).order() == 62);
}
