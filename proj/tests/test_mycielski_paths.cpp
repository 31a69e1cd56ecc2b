#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <stdexcept>

#include "doctest.h"
#include "hamlab/constructions.hpp"
#include "hamlab/enumerate.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/hamiltonian.hpp"
#include "hamlab/mycielski_paths.hpp"
#include "test_support.hpp"

using namespace hamlab;

namespace {

Graph wheel6() {
    // hub 5 joined to C_5: hamiltonian-connected, order 6
    Graph g = standard_graph(StandardKind::cycle, 5);
    return join_universal(g);
}

LiftResult lift(const Graph& g, int s, int t) {
    const auto mk = mycielski(g);
    const LiftCase c = classify_pair(g, mk.labeling, s, t);
    LiftRequest req{g, mk.labeling, {s, t}, c};
    const bool parity = c == LiftCase::XZ || c == LiftCase::X1Y1 || c == LiftCase::YY_EVEN ||
                        c == LiftCase::YY_ODD;
    const LiftResult res = parity ? lift_parity(req) : lift_direct(req);
    const auto verdict =
        verify_path(mk.graph, res.path, true, std::make_pair(s, t));
    REQUIRE_MESSAGE(verdict.ok, verdict.message);
    return res;
}

}  // namespace

TEST_CASE("explicit paths through mu(P_n)") {
    CHECK(prop7_path(2) == VertexPath{0, 3, 4, 2, 1});
    CHECK(prop7_path(3) == VertexPath{0, 4, 2, 1, 5, 6, 3});
    for (int n = 2; n <= 12; ++n) {
        const auto mk = mycielski(standard_graph(StandardKind::path, n));
        const VertexPath p = prop7_path(n);
        const int far_end = n % 2 == 0 ? n - 1 : 2 * n - 3;
        CHECK(verify_path(mk.graph, p, true, std::make_pair(0, far_end)).ok);
        CHECK(p.size() == std::size_t(2 * n + 1));
    }
    CHECK_THROWS_AS(prop7_path(1), std::invalid_argument);
}

TEST_CASE("parity chords") {
    const Graph k4 = standard_graph(StandardKind::complete, 4);
    const auto chord = find_parity_chord(k4, {0, 1, 2, 3});
    REQUIRE(chord.has_value());
    CHECK(*chord == std::make_pair(1, 3));  // odd positions first

    const Graph c5 = standard_graph(StandardKind::cycle, 5);
    const auto wrap = find_parity_chord(c5, {0, 1, 2, 3, 4});
    REQUIRE(wrap.has_value());
    CHECK(*wrap == std::make_pair(0, 4));  // no odd-odd chord, the rim closes even-even

    const Graph p4 = standard_graph(StandardKind::path, 4);
    CHECK_FALSE(find_parity_chord(p4, {0, 1, 2, 3}).has_value());

    CHECK_THROWS_AS(find_parity_chord(p4, {0, 2, 1, 3}), std::invalid_argument);
}

TEST_CASE("x-x lift on K_4 reproduces the alternating pattern") {
    const Graph k4 = standard_graph(StandardKind::complete, 4);
    const auto res = lift(k4, 0, 3);
    CHECK(res.method == "pattern");
    CHECK(res.applied == LiftCase::XX);
    CHECK(res.path == VertexPath{0, 5, 2, 7, 8, 4, 1, 6, 3});
    CHECK(verify_path(k4, res.base_path, true).ok);
}

TEST_CASE("every case lifts by pattern on hamiltonian-connected bases") {
    for (const Graph& g : {standard_graph(StandardKind::complete, 4), wheel6()}) {
        const auto mk = mycielski(g);
        const int n = g.order();
        std::map<LiftCase, int> seen;
        for (int s = 0; s < mk.graph.order(); ++s)
            for (int t = s + 1; t < mk.graph.order(); ++t) {
                const auto res = lift(g, s, t);
                CHECK(res.method == "pattern");
                if (res.method == "pattern")
                    CHECK(verify_path(g, res.base_path, true).ok);
                ++seen[res.applied];
            }
        CHECK(seen[LiftCase::XX] > 0);
        CHECK(seen[LiftCase::XY] > 0);
        CHECK(seen[LiftCase::XZ] > 0);
        CHECK(seen[LiftCase::X1Y1] > 0);
        CHECK(seen[LiftCase::YZ] > 0);
        CHECK(seen[LiftCase::YY_ADJ] > 0);
        // y-y pairs over non-adjacent base vertices resolve to a parity branch
        const int parity_total = seen[LiftCase::YY_EVEN] + seen[LiftCase::YY_ODD];
        if (n == 6) CHECK(parity_total > 0);
        (void)n;
    }
}

TEST_CASE("classification covers all vertex-class combinations") {
    const Graph k4 = standard_graph(StandardKind::complete, 4);
    const auto mk = mycielski(k4);
    const auto& lab = mk.labeling;
    CHECK(classify_pair(k4, lab, 0, 1) == LiftCase::XX);
    CHECK(classify_pair(k4, lab, 0, 5) == LiftCase::XY);       // x_0 with y of 1
    CHECK(classify_pair(k4, lab, 0, 8) == LiftCase::XZ);
    CHECK(classify_pair(k4, lab, 0, 4) == LiftCase::X1Y1);     // x and y of the same vertex
    CHECK(classify_pair(k4, lab, 4, 8) == LiftCase::YZ);
    CHECK(classify_pair(k4, lab, 4, 5) == LiftCase::YY_ADJ);   // bases 0,1 adjacent
    CHECK(classify_pair(k4, lab, 8, 4) == LiftCase::YZ);       // order-insensitive

    const Graph c5 = standard_graph(StandardKind::cycle, 5);
    const auto mc = mycielski(c5);
    CHECK(classify_pair(c5, mc.labeling, 5, 7) == LiftCase::YY_EVEN);  // bases 0,2 non-adjacent

    CHECK_THROWS_AS(classify_pair(k4, lab, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(classify_pair(k4, lab, 0, 9), std::invalid_argument);
}

TEST_CASE("case mismatch is rejected in both engines") {
    const Graph k4 = standard_graph(StandardKind::complete, 4);
    const auto mk = mycielski(k4);
    // endpoints are x-x but the request says XZ
    CHECK_THROWS_AS(lift_parity(LiftRequest{k4, mk.labeling, {0, 1}, LiftCase::XZ}),
                    std::invalid_argument);
    CHECK_THROWS_AS(lift_direct(LiftRequest{k4, mk.labeling, {0, 8}, LiftCase::XX}),
                    std::invalid_argument);
    // direct engine refuses parity cases and vice versa
    CHECK_THROWS_AS(lift_direct(LiftRequest{k4, mk.labeling, {0, 8}, LiftCase::XZ}),
                    std::invalid_argument);
    CHECK_THROWS_AS(lift_parity(LiftRequest{k4, mk.labeling, {0, 1}, LiftCase::XX}),
                    std::invalid_argument);
}

TEST_CASE("whole-graph certificates") {
    CHECK_THROWS_AS(mycielski_hc_certificate(standard_graph(StandardKind::complete, 2)),
                    std::invalid_argument);

    // base with a missing path: P_4 is not hamiltonian-connected
    const auto p4 = mycielski_hc_certificate(standard_graph(StandardKind::path, 4));
    REQUIRE(p4.base_failure.has_value());
    CHECK(p4.certificate.outcome == HCCertificate::Outcome::counterexample);

    const auto k4 = mycielski_hc_certificate(standard_graph(StandardKind::complete, 4));
    CHECK(k4.certificate.outcome == HCCertificate::Outcome::connected);
    CHECK(k4.certificate.witnesses.size() == 36);  // C(9,2)
    CHECK_FALSE(k4.base_failure.has_value());
    int patterned = 0;
    for (const auto& [name, count] : k4.method_tally)
        if (name != "fallback") patterned += count;
    CHECK(patterned == 36);
    CHECK(k4.method_tally.count("fallback") == 0);
    const auto mk4 = mycielski(standard_graph(StandardKind::complete, 4));
    for (const auto& [pair, path] : k4.certificate.witnesses)
        CHECK(verify_path(mk4.graph, path, true, pair).ok);

    // odd order goes through the exact solver wholesale
    const auto k5 = mycielski_hc_certificate(standard_graph(StandardKind::complete, 5));
    CHECK(k5.certificate.outcome == HCCertificate::Outcome::connected);
    CHECK(k5.certificate.witnesses.size() == 55);  // C(11,2)
    CHECK(k5.method_tally.at("fallback") == 55);
}

TEST_CASE("patterns carry every even-order hamiltonian-connected base up to 6") {
    int fallbacks = 0;
    int pairs = 0;
    for (int n : {4, 6}) {
        for (const Graph& g : connected_graphs(n)) {
            if (is_hamiltonian_connected(g).outcome != HCCertificate::Outcome::connected)
                continue;
            const auto report = mycielski_hc_certificate(g);
            CHECK(report.certificate.outcome == HCCertificate::Outcome::connected);
            for (const auto& [name, count] : report.method_tally) {
                pairs += count;
                if (name == "fallback") fallbacks += count;
            }
        }
    }
    CHECK(pairs == 36 + 13 * 78);  // one base at n=4, thirteen at n=6
    CHECK(fallbacks == 0);         // frozen baseline: the patterns never miss
}
