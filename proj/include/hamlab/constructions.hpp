#pragma once

#include <string>

#include "hamlab/graph.hpp"

namespace hamlab {

// Index contract for mu(G) on 2n+1 vertices: the X copy keeps G's ids, the
// Y shadow sits at n+i, and the hub z is the last vertex. The X range induces
// a graph equal (not merely isomorphic) to G.
struct MycielskiLabeling {
    int base_n = 0;

    int x(int i) const { return i; }
    int y(int i) const { return base_n + i; }
    int z() const { return 2 * base_n; }

    bool is_x(int v) const { return v >= 0 && v < base_n; }
    bool is_y(int v) const { return v >= base_n && v < 2 * base_n; }
    bool is_z(int v) const { return v == 2 * base_n; }
    // Base vertex of an x- or y-vertex.
    int base(int v) const { return is_y(v) ? v - base_n : v; }
};

struct MycielskiGraph {
    Graph graph;
    MycielskiLabeling labeling;
};

// mu(G): keep G on X, join y_i to every X-neighbor of x_i, join z to all Y.
// Order 2n+1, size 3m+n.
MycielskiGraph mycielski(const Graph& g);

// M_2 = K_2, M_{j+1} = mu(M_j). Requires k >= 2; practical bound k <= 6.
Graph iterated_mycielski(int k);

enum class StandardKind { path, cycle, complete };
// Consecutive-integer labeling; cycle requires n >= 3.
Graph standard_graph(StandardKind kind, int n);
Graph standard_graph(const std::string& kind, int n);

// G joined with one universal vertex (id n).
Graph join_universal(const Graph& g);

}  // namespace hamlab
