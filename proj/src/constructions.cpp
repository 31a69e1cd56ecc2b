#include "hamlab/constructions.hpp"

#include <stdexcept>

namespace hamlab {

MycielskiGraph mycielski(const Graph& g) {
    const int n = g.order();
    MycielskiLabeling lab{n};
    Graph m(2 * n + 1);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (v > u) m.add_edge(lab.x(u), lab.x(v));
            m.add_edge(lab.x(u), lab.y(v));
        }
        m.add_edge(lab.z(), lab.y(u));
    }
    return {std::move(m), lab};
}

Graph iterated_mycielski(int k) {
    if (k < 2) throw std::invalid_argument("iterated mycielski needs k >= 2");
    Graph g = standard_graph(StandardKind::complete, 2);
    for (int j = 2; j < k; ++j) g = mycielski(g).graph;
    return g;
}

Graph standard_graph(StandardKind kind, int n) {
    if (n < 1) throw std::invalid_argument("graph order must be positive");
    Graph g(n);
    switch (kind) {
        case StandardKind::path:
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            break;
        case StandardKind::cycle:
            if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            g.add_edge(n - 1, 0);
            break;
        case StandardKind::complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
            break;
    }
    return g;
}

Graph standard_graph(const std::string& kind, int n) {
    if (kind == "path") return standard_graph(StandardKind::path, n);
    if (kind == "cycle") return standard_graph(StandardKind::cycle, n);
    if (kind == "complete") return standard_graph(StandardKind::complete, n);
    throw std::invalid_argument("unknown standard graph kind: " + kind);
}

Graph join_universal(const Graph& g) {
    const int n = g.order();
    Graph h(n + 1);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u))
            if (v > u) h.add_edge(u, v);
        h.add_edge(u, n);
    }
    return h;
}

}  // namespace hamlab
