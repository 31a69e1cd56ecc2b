#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "hamlab/enumerate.hpp"
#include "hamlab/graph.hpp"
#include "test_support.hpp"

using namespace hamlab;

TEST_CASE("class counts match the literature") {
    const int expected_all[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 8; ++n) CHECK(all_graphs(n).size() == std::size_t(expected_all[n]));
    const int expected_conn[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n)
        CHECK(connected_graphs(n).size() == std::size_t(expected_conn[n]));
    CHECK_THROWS_AS(all_graphs(9), std::invalid_argument);
    CHECK_THROWS_AS(all_graphs(0), std::invalid_argument);
}

TEST_CASE("representatives are pairwise non-isomorphic and exhaustive") {
    for (int n = 1; n <= 5; ++n) {
        const auto& reps = all_graphs(n);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                CHECK_FALSE(oracle::isomorphic_bf(reps[i], reps[j]));
        // every labeled graph matches exactly one representative
        for (const Graph& g : oracle::labeled_graphs_bf(n)) {
            int hits = 0;
            for (const Graph& rep : reps)
                if (oracle::isomorphic_bf(g, rep)) ++hits;
            CHECK(hits == 1);
        }
        CHECK(reps.size() == oracle::iso_classes_bf(oracle::labeled_graphs_bf(n)).size());
    }
}

TEST_CASE("connected listing is the connected slice in the same order") {
    for (int n = 1; n <= 6; ++n) {
        const auto conn = connected_graphs(n);
        std::size_t cursor = 0;
        for (const Graph& g : all_graphs(n)) {
            if (!is_connected(g)) continue;
            REQUIRE(cursor < conn.size());
            CHECK(conn[cursor] == g);
            ++cursor;
        }
        CHECK(cursor == conn.size());
    }
}

TEST_CASE("self-complementary classes") {
    CHECK(self_complementary_graphs(1).size() == 1);
    CHECK(self_complementary_graphs(2).empty());
    CHECK(self_complementary_graphs(3).empty());
    CHECK(self_complementary_graphs(6).empty());
    CHECK(self_complementary_graphs(7).empty());
    CHECK(self_complementary_graphs(4).size() == 1);
    CHECK(self_complementary_graphs(5).size() == 2);
    CHECK(self_complementary_graphs(8).size() == 10);
    for (int n : {4, 5}) {
        const auto mine = self_complementary_graphs(n);
        const auto ref = oracle::self_complementary_classes_bf(n);
        REQUIRE(mine.size() == ref.size());
        for (const Graph& g : mine) {
            CHECK(is_self_complementary(g).has_value());
            int hits = 0;
            for (const Graph& r : ref)
                if (oracle::isomorphic_bf(g, r)) ++hits;
            CHECK(hits == 1);
        }
    }
    CHECK_THROWS_AS(self_complementary_graphs(13), std::invalid_argument);
}

TEST_CASE("nine-vertex self-complementary classes via the filtered last level") {
    const auto classes = self_complementary_graphs(9);
    CHECK(classes.size() == 36);
    for (const Graph& g : classes) {
        CHECK(g.size() == 18);
        CHECK(is_self_complementary(g).has_value());
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            CHECK_FALSE(isomorphic(classes[i], classes[j]));
}
