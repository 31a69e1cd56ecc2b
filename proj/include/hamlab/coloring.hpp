#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

// Proper coloring with colors 0..k-1, canonicalized by first appearance in
// vertex order. When produced by chromatic_number, k is optimal and the
// optimality was proven by an exhausted (k-1)-search.
struct ColoringCertificate {
    std::vector<int> colors;
    int k = 0;
};

// chi(G) plus the exact chromatic number of every single-vertex and
// single-edge deletion. verdict is true iff every entry equals chi - 1.
struct CriticalityReport {
    int chi = 0;
    std::vector<int> per_vertex;                     // indexed by deleted vertex
    std::vector<std::tuple<int, int, int>> per_edge;  // (u, v, chi of G - uv), u < v
    bool verdict = false;
};

struct MycielskiCriticalityCheck {
    CriticalityReport base;
    CriticalityReport lifted;
    bool holds = false;  // lifted is critical with chi exactly base.chi + 1
};

// Exact k-colorability by saturation-order branch and bound; nullopt means a
// proven exhaustive failure. k >= 1.
std::optional<std::vector<int>> k_colorable(const Graph& g, int k);

// Exact chi with a proper coloring. Disconnected inputs are fine (chi is the
// max over components by construction).
ColoringCertificate chromatic_number(const Graph& g);

// Requires at least one edge (chi >= 2). jobs > 1 fans the deletion sweep out
// to worker threads; the report is identical regardless of jobs.
CriticalityReport criticality_report(const Graph& g, int jobs = 1);

// Requires g itself critical; checks that its mycielskian is critical with
// chromatic number one higher.
MycielskiCriticalityCheck check_mycielski_criticality(const Graph& g, int jobs = 1);

}  // namespace hamlab
