#include "hamlab/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "hamlab/constructions.hpp"
#include "hamlab/parallel.hpp"

namespace hamlab {

namespace {

struct ColorSearch {
    const Graph& g;
    int n;
    int k;
    std::vector<int> colors;        // -1 while unassigned
    std::vector<std::vector<int>> neighbor_count;  // [v][c]: colored neighbors of v using c
    std::vector<int> saturation;    // distinct colors among colored neighbors

    explicit ColorSearch(const Graph& graph, int limit)
        : g(graph),
          n(graph.order()),
          k(limit),
          colors(n, -1),
          neighbor_count(n, std::vector<int>(limit, 0)),
          saturation(n, 0) {}

    // Saturation-first pick, degree then lowest id as tie breaks.
    int pick() const {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (colors[v] != -1) continue;
            if (best == -1 || saturation[v] > saturation[best] ||
                (saturation[v] == saturation[best] && g.degree(v) > g.degree(best)))
                best = v;
        }
        return best;
    }

    void assign(int v, int c) {
        colors[v] = c;
        for (int w : g.neighbors(v)) {
            if (neighbor_count[w][c]++ == 0) ++saturation[w];
        }
    }

    void unassign(int v, int c) {
        colors[v] = -1;
        for (int w : g.neighbors(v)) {
            if (--neighbor_count[w][c] == 0) --saturation[w];
        }
    }

    bool solve(int used) {
        const int v = pick();
        if (v == -1) return true;
        if (saturation[v] >= k) return false;
        const int cap = std::min(k, used + 1);  // new colors in canonical order only
        for (int c = 0; c < cap; ++c) {
            if (neighbor_count[v][c] > 0) continue;
            assign(v, c);
            if (solve(std::max(used, c + 1))) return true;
            unassign(v, c);
        }
        return false;
    }
};

std::vector<int> canonicalize(std::vector<int> colors) {
    std::vector<int> remap(colors.size(), -1);
    int next = 0;
    for (int& c : colors) {
        if (remap[c] == -1) remap[c] = next++;
        c = remap[c];
    }
    return colors;
}

int greedy_upper_bound(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    std::vector<int> colors(n, -1);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int used = 0;
    for (int v : order) {
        std::vector<char> taken(used + 1, 0);
        for (int w : g.neighbors(v))
            if (colors[w] != -1 && colors[w] < used) taken[colors[w]] = 1;
        int c = 0;
        while (c < used && taken[c]) ++c;
        colors[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

int greedy_clique_bound(const Graph& g) {
    const int n = g.order();
    int best = n > 0 ? 1 : 0;
    for (int seed = 0; seed < n; ++seed) {
        std::vector<int> clique{seed};
        std::vector<int> cands = g.neighbors(seed);
        while (!cands.empty()) {
            int pick = cands[0];
            for (int c : cands)
                if (g.degree(c) > g.degree(pick)) pick = c;
            clique.push_back(pick);
            std::vector<int> next;
            for (int c : cands)
                if (c != pick && g.has_edge(c, pick)) next.push_back(c);
            cands = std::move(next);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

Graph without_edge(const Graph& g, int u, int v) {
    Graph h = g;
    h.remove_edge(u, v);
    return h;
}

}  // namespace

std::optional<std::vector<int>> k_colorable(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("color count must be positive");
    const int n = g.order();
    if (n == 0) return std::vector<int>{};
    ColorSearch search(g, k);
    if (!search.solve(0)) return std::nullopt;
    return canonicalize(std::move(search.colors));
}

ColoringCertificate chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) return {{}, 0};
    const int lb = greedy_clique_bound(g);
    const int ub = greedy_upper_bound(g);
    int chi = -1;
    std::vector<int> witness;
    bool lower_proven = false;  // a failed (chi-1)-search happened in the loop
    for (int k = lb; k <= ub; ++k) {
        auto attempt = k_colorable(g, k);
        if (attempt) {
            chi = k;
            witness = std::move(*attempt);
            break;
        }
        lower_proven = true;
    }
    if (chi == -1) throw std::logic_error("greedy upper bound failed to color");
    if (chi >= 2 && !lower_proven && k_colorable(g, chi - 1))
        throw std::logic_error("chromatic bound accounting is inconsistent");
    return {std::move(witness), chi};
}

CriticalityReport criticality_report(const Graph& g, int jobs) {
    const int n = g.order();
    if (g.size() == 0) throw std::invalid_argument("criticality needs at least one edge");
    CriticalityReport report;
    report.chi = chromatic_number(g).k;
    report.per_vertex.assign(n, 0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    report.per_edge.assign(edges.size(), {0, 0, 0});
    parallel_for(n + static_cast<int>(edges.size()), jobs, [&](int i) {
        if (i < n) {
            report.per_vertex[i] = chromatic_number(delete_vertex(g, i)).k;
        } else {
            const auto [u, v] = edges[i - n];
            report.per_edge[i - n] = {u, v, chromatic_number(without_edge(g, u, v)).k};
        }
    });
    report.verdict = true;
    for (int value : report.per_vertex)
        if (value != report.chi - 1) report.verdict = false;
    for (const auto& [u, v, value] : report.per_edge)
        if (value != report.chi - 1) report.verdict = false;
    return report;
}

MycielskiCriticalityCheck check_mycielski_criticality(const Graph& g, int jobs) {
    MycielskiCriticalityCheck check;
    check.base = criticality_report(g, jobs);
    if (!check.base.verdict)
        throw std::invalid_argument("input graph is not critical");
    check.lifted = criticality_report(mycielski(g).graph, jobs);
    check.holds = check.lifted.verdict && check.lifted.chi == check.base.chi + 1;
    return check;
}

}  // namespace hamlab
