#pragma once

#include <map>
#include <optional>
#include <utility>

#include "hamlab/graph.hpp"

namespace hamlab {

// All-pairs Hamiltonian-path certificate. Witness keys are (min, max) pairs;
// each stored path runs from the smaller to the larger endpoint and passes
// verify_path with those endpoints. On failure bad_pair is the first pair
// without a path, in colex order (0,1), (0,2), (1,2), (0,3), ...
struct HCCertificate {
    enum class Outcome { connected, counterexample };

    Outcome outcome = Outcome::counterexample;
    std::map<std::pair<int, int>, VertexPath> witnesses;
    std::pair<int, int> bad_pair{-1, -1};
};

// Exact subset DP (order <= 24 enforced). Deterministic witness: walk forward
// from u, always taking the lowest-numbered neighbor that still completes.
std::optional<VertexPath> hamiltonian_path_between(const Graph& g, int u, int v);

// Hamiltonian path with free endpoints: lowest starting vertex first, then
// its lowest completable partner.
std::optional<VertexPath> has_hamiltonian_path(const Graph& g);

// Cycle witness returned as a vertex sequence starting at 0 whose last entry
// is adjacent to 0. Requires n >= 3.
std::optional<VertexPath> hamiltonian_cycle(const Graph& g);

// K_2 counts as Hamiltonian-connected; orders below 2 report a counterexample
// with bad_pair (-1,-1). Disconnected inputs fail on their first pair.
HCCertificate is_hamiltonian_connected(const Graph& g);

// Fixed point of joining non-adjacent pairs with degree sum >= n.
Graph closure(const Graph& g);

// True iff for every k < n/2: d_k >= k+1 or d_{n-k} >= n-k. Requires n > 3.
bool chvatal_hamiltonian_condition(const DegreeSequence& ds);

// True iff for every k < (n+1)/2: d_k >= k or d_{n+1-k} >= n-k. Requires n >= 2.
bool path_condition(const DegreeSequence& ds);

// True iff every non-adjacent pair has degree sum >= n+1. Requires n >= 3.
bool ore_hc_condition(const Graph& g);

}  // namespace hamlab
