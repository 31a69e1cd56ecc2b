#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "hamlab/constructions.hpp"
#include "hamlab/enumerate.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/hamiltonian.hpp"
#include "hamlab/parallel.hpp"
#include "test_support.hpp"

using namespace hamlab;

namespace {
Graph std_g(StandardKind k, int n) { return standard_graph(k, n); }
}  // namespace

TEST_CASE("fixed-endpoint paths on small graphs") {
    const Graph k4 = std_g(StandardKind::complete, 4);
    const auto p = hamiltonian_path_between(k4, 0, 3);
    REQUIRE(p.has_value());
    CHECK(*p == VertexPath{0, 1, 2, 3});  // lowest-neighbor tie-break
    CHECK(verify_path(k4, *p, true, std::make_pair(0, 3)).ok);

    const Graph c4 = std_g(StandardKind::cycle, 4);
    CHECK_FALSE(hamiltonian_path_between(c4, 0, 2).has_value());  // opposite corners
    CHECK(hamiltonian_path_between(c4, 0, 1).has_value());

    Graph star(4);
    for (int leaf = 1; leaf < 4; ++leaf) star.add_edge(0, leaf);
    CHECK_FALSE(hamiltonian_path_between(star, 1, 2).has_value());
    CHECK_FALSE(has_hamiltonian_path(star).has_value());

    const Graph p4 = std_g(StandardKind::path, 4);
    const auto free_path = has_hamiltonian_path(p4);
    REQUIRE(free_path.has_value());
    CHECK(*free_path == VertexPath{0, 1, 2, 3});

    CHECK_THROWS_AS(hamiltonian_path_between(k4, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(hamiltonian_path_between(k4, 0, 4), std::out_of_range);
}

TEST_CASE("cycle witnesses") {
    const Graph c5 = std_g(StandardKind::cycle, 5);
    const auto cyc = hamiltonian_cycle(c5);
    REQUIRE(cyc.has_value());
    CHECK(cyc->front() == 0);
    CHECK(cyc->size() == 5);
    CHECK(c5.has_edge(cyc->back(), 0));
    CHECK(verify_path(c5, *cyc, true).ok);

    REQUIRE(hamiltonian_cycle(std_g(StandardKind::complete, 4)).has_value());
    Graph star(4);
    for (int leaf = 1; leaf < 4; ++leaf) star.add_edge(0, leaf);
    CHECK_FALSE(hamiltonian_cycle(star).has_value());
    CHECK_FALSE(hamiltonian_cycle(std_g(StandardKind::path, 5)).has_value());
    CHECK_THROWS_AS(hamiltonian_cycle(Graph(2)), std::invalid_argument);
}

TEST_CASE("hamiltonian-connected certificates") {
    const auto k4 = is_hamiltonian_connected(std_g(StandardKind::complete, 4));
    CHECK(k4.outcome == HCCertificate::Outcome::connected);
    CHECK(k4.witnesses.size() == 6);
    for (const auto& [pair, path] : k4.witnesses) {
        CHECK(path.front() == pair.first);
        CHECK(path.back() == pair.second);
        CHECK(pair.first < pair.second);
    }

    const auto c5 = is_hamiltonian_connected(std_g(StandardKind::cycle, 5));
    CHECK(c5.outcome == HCCertificate::Outcome::counterexample);
    CHECK(c5.bad_pair == std::make_pair(0, 2));

    CHECK(is_hamiltonian_connected(std_g(StandardKind::complete, 2)).outcome ==
          HCCertificate::Outcome::connected);
    CHECK(is_hamiltonian_connected(Graph(1)).bad_pair == std::make_pair(-1, -1));

    Graph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK(is_hamiltonian_connected(split).bad_pair == std::make_pair(0, 1));
}

TEST_CASE("closure") {
    // C_4 closes to K_4: opposite corners have degree sum 4
    CHECK(closure(std_g(StandardKind::cycle, 4)) == std_g(StandardKind::complete, 4));
    // P_3 is already closed
    const Graph p3 = std_g(StandardKind::path, 3);
    CHECK(closure(p3) == p3);
    // idempotent on every graph of order 6
    for (const Graph& g : all_graphs(6)) {
        const Graph once = closure(g);
        CHECK(closure(once) == once);
        CHECK(once.size() >= g.size());
    }
}

TEST_CASE("degree-sequence conditions") {
    CHECK_FALSE(chvatal_hamiltonian_condition(DegreeSequence::from_values({2, 2, 2, 2, 2})));
    CHECK(chvatal_hamiltonian_condition(DegreeSequence::from_graph(std_g(StandardKind::complete, 4))));
    CHECK_THROWS_AS(chvatal_hamiltonian_condition(DegreeSequence::from_values({1, 1})),
                    std::invalid_argument);

    CHECK(path_condition(DegreeSequence::from_values({1, 1, 2, 3, 3})));
    CHECK_FALSE(path_condition(DegreeSequence::from_values({1, 1, 2, 2, 4})));
    CHECK(path_condition(DegreeSequence::from_values({1, 1})));

    CHECK(ore_hc_condition(std_g(StandardKind::complete, 4)));
    CHECK_FALSE(ore_hc_condition(std_g(StandardKind::cycle, 5)));
    CHECK_THROWS_AS(ore_hc_condition(Graph(2)), std::invalid_argument);
}

TEST_CASE("solver matches brute force on every graph of order at most 5") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    const auto fast = hamiltonian_path_between(g, u, v);
                    const bool slow = oracle::ham_path_between_bf(g, u, v);
                    CHECK(fast.has_value() == slow);
                    if (fast) CHECK(verify_path(g, *fast, true, std::make_pair(u, v)).ok);
                }
            CHECK(has_hamiltonian_path(g).has_value() == oracle::ham_path_any_bf(g));
            if (n >= 3) CHECK(hamiltonian_cycle(g).has_value() == oracle::ham_cycle_bf(g));
        }
    }
}

TEST_CASE("order limit is enforced") {
    CHECK_THROWS_AS(hamiltonian_path_between(Graph(25), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(hamiltonian_cycle(Graph(25)), std::invalid_argument);
    CHECK_THROWS_AS(is_hamiltonian_connected(Graph(25)), std::invalid_argument);
}
