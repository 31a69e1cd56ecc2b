#pragma once

#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

// One representative per isomorphism class, by augmentation: every class on
// n-1 vertices is extended with a new vertex through all 2^(n-1) attachment
// sets, then deduplicated by invariant buckets plus explicit isomorphism
// search. Levels are cached; the returned reference stays valid. Practical up
// to n = 8 (12346 classes).
const std::vector<Graph>& all_graphs(int n);

std::vector<Graph> connected_graphs(int n);

// Graphs isomorphic to their complement. For n = 9 the final augmentation
// level is filtered before dedup (edge count, palindromic degrees, an actual
// complement isomorphism), which keeps the candidate stream tractable.
std::vector<Graph> self_complementary_graphs(int n);

}  // namespace hamlab
