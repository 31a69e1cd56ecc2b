#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hamlab/coloring.hpp"
#include "hamlab/constructions.hpp"
#include "hamlab/enumerate.hpp"
#include "hamlab/graph.hpp"
#include "test_support.hpp"

using namespace hamlab;

TEST_CASE("mycielskian of a single edge is the five-cycle") {
    const auto mk = mycielski(standard_graph(StandardKind::complete, 2));
    CHECK(mk.graph.order() == 5);
    CHECK(mk.graph.size() == 5);
    CHECK(isomorphic(mk.graph, standard_graph(StandardKind::cycle, 5)));
    CHECK(mk.labeling.base_n == 2);
    CHECK(mk.labeling.x(1) == 1);
    CHECK(mk.labeling.y(0) == 2);
    CHECK(mk.labeling.z() == 4);
    CHECK(mk.labeling.is_x(0));
    CHECK(mk.labeling.is_y(3));
    CHECK(mk.labeling.is_z(4));
    CHECK(mk.labeling.base(3) == 1);
}

TEST_CASE("mycielskian of the five-cycle") {
    const auto mk = mycielski(standard_graph(StandardKind::cycle, 5));
    CHECK(mk.graph.order() == 11);
    CHECK(mk.graph.size() == 20);
    CHECK_FALSE(has_triangle(mk.graph));
    CHECK(chromatic_number(mk.graph).k == 4);
    CHECK(isomorphic(mk.graph, iterated_mycielski(4)));
}

TEST_CASE("degenerate base") {
    const auto mk = mycielski(Graph(1));
    CHECK(mk.graph.order() == 3);
    CHECK(mk.graph.size() == 1);
    CHECK(mk.graph.has_edge(1, 2));
}

TEST_CASE("iterated construction sizes") {
    const auto m3 = iterated_mycielski(3);
    CHECK(m3.order() == 5);
    CHECK(m3.size() == 5);
    const auto m4 = iterated_mycielski(4);
    CHECK(m4.order() == 11);
    CHECK(m4.size() == 20);
    const auto m5 = iterated_mycielski(5);
    CHECK(m5.order() == 23);
    CHECK(m5.size() == 71);
    const auto m6 = iterated_mycielski(6);
    CHECK(m6.order() == 47);
    CHECK(m6.size() == 236);
    CHECK_THROWS_AS(iterated_mycielski(1), std::invalid_argument);
}

TEST_CASE("the x-block induces the base graph") {
    for (const Graph& g : connected_graphs(5)) {
        const auto mk = mycielski(g);
        CHECK(mk.graph.order() == 11);
        CHECK(mk.graph.size() == 3 * g.size() + 5);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) {
                CHECK(mk.graph.has_edge(u, v) == g.has_edge(u, v));
                // y vertices copy x adjacency but stay independent
                CHECK(mk.graph.has_edge(mk.labeling.y(u), v) == g.has_edge(u, v));
                CHECK_FALSE(mk.graph.has_edge(mk.labeling.y(u), mk.labeling.y(v)));
            }
        for (int u = 0; u < 5; ++u) {
            CHECK(mk.graph.has_edge(mk.labeling.y(u), mk.labeling.z()));
            CHECK_FALSE(mk.graph.has_edge(u, mk.labeling.z()));
        }
    }
}

TEST_CASE("construction preserves triangle-freeness and raises the chromatic number") {
    for (const Graph& g : connected_graphs(6)) {
        const auto mk = mycielski(g);
        CHECK(has_triangle(mk.graph) == has_triangle(g));
        CHECK(chromatic_number(mk.graph).k == chromatic_number(g).k + 1);
    }
}

TEST_CASE("standard graphs") {
    const Graph p4 = standard_graph(StandardKind::path, 4);
    CHECK(p4.size() == 3);
    CHECK(p4.has_edge(0, 1));
    CHECK(p4.has_edge(2, 3));
    const Graph c6 = standard_graph(StandardKind::cycle, 6);
    CHECK(c6.size() == 6);
    CHECK(c6.has_edge(5, 0));
    const Graph k5 = standard_graph(StandardKind::complete, 5);
    CHECK(k5.size() == 10);
    CHECK(standard_graph(StandardKind::path, 1).order() == 1);
    CHECK_THROWS_AS(standard_graph(StandardKind::cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(standard_graph(StandardKind::path, 0), std::invalid_argument);

    CHECK(standard_graph("path", 4) == p4);
    CHECK(standard_graph("cycle", 6) == c6);
    CHECK(standard_graph("complete", 5) == k5);
    CHECK_THROWS_AS(standard_graph("wheel", 5), std::invalid_argument);
}

TEST_CASE("joining a universal vertex") {
    std::mt19937 rng(7);
    const auto& graphs = all_graphs(5);
    std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph& g = graphs[pick(rng)];
        const Graph j = join_universal(g);
        CHECK(j.order() == 6);
        CHECK(j.size() == g.size() + 5);
        for (int v = 0; v < 5; ++v) {
            CHECK(j.has_edge(v, 5));
            for (int u = v + 1; u < 5; ++u) CHECK(j.has_edge(u, v) == g.has_edge(u, v));
        }
    }
}
