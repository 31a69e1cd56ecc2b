#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hamlab/constructions.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/hamiltonian.hpp"

namespace hamlab {

// Endpoint classes of a mu(G) vertex pair. Subscripts in the pattern
// machinery are 1-indexed positions along a chosen base hamiltonian path of
// G, never fixed vertex names: position i plays "x_i"/"y_i".
enum class LiftCase { XX, XY, XZ, X1Y1, YZ, YY_ADJ, YY_EVEN, YY_ODD };

const char* lift_case_name(LiftCase c);

struct LiftRequest {
    Graph g;  // hamiltonian-connected base graph
    MycielskiLabeling labeling;
    std::pair<int, int> endpoints;  // mu(G) vertex ids
    LiftCase case_id;
};

struct LiftResult {
    VertexPath path;        // hamiltonian path of mu(g), checker-verified
    std::string method;     // "pattern" or "fallback"
    LiftCase applied;       // pattern actually used (YY parity may re-dispatch)
    VertexPath base_path;   // base path consumed by the pattern; empty on fallback
};

// Explicit hamiltonian path of mu(P_n), n >= 2. Even n runs x/y-alternating
// up, hub, then the swapped alternation; odd n reroutes through
// x_n x_{n-1} y_n z y_1 before finishing. Output is checker-verified.
VertexPath prop7_path(int n);

// Lowest equal-parity position pair (0-indexed, r < s) along base whose
// vertices are adjacent in g; odd positions are scanned before even ones.
// base must be a hamiltonian path of g.
std::optional<std::pair<int, int>> find_parity_chord(const Graph& g, const VertexPath& base);

// Pattern lifts. Both search bounded families of base paths (terminal
// neighbors in ascending order, then position chords) and fall back to the
// exact solver on mu(g); an unverified path can never escape. Throws if the
// endpoint classes do not match case_id, or if even the fallback finds
// nothing (the input was not hamiltonian-connected).
LiftResult lift_direct(const LiftRequest& req);  // XX, XY, YZ, YY_ADJ
LiftResult lift_parity(const LiftRequest& req);  // XZ, X1Y1, YY_EVEN, YY_ODD

// Maps an arbitrary mu(G) pair to its case. Non-adjacent y-pairs classify as
// YY_EVEN; lift_parity re-dispatches on the parity actually found.
LiftCase classify_pair(const Graph& g, const MycielskiLabeling& lab, int s, int t);

struct MycielskiHCReport {
    HCCertificate certificate;               // over mu(g)
    std::map<std::string, int> method_tally;  // per pattern name, plus "fallback"
    std::optional<std::pair<int, int>> base_failure;  // pair of g with no path
};

// All-pairs hamiltonian-path certificate for mu(g) built from case lifts,
// with exact-solver fallback per pair. Requires order >= 3 (K_2 rejected);
// odd orders go through the fallback wholesale.
MycielskiHCReport mycielski_hc_certificate(const Graph& g);

}  // namespace hamlab
