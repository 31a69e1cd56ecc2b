#include "hamlab/hamiltonian.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hamlab {

namespace {

constexpr int kMaxExactOrder = 24;

void check_exact_order(const Graph& g) {
    if (g.order() > kMaxExactOrder)
        throw std::invalid_argument("graph too large for exact hamiltonicity search (max 24)");
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u] |= std::uint32_t(1) << v;
    return adj;
}

// reach[S], for subsets S containing anchor: bitmask of endpoints w such that
// some simple path starting at anchor spans exactly S and ends at w.
std::vector<std::uint32_t> reach_table(const std::vector<std::uint32_t>& adj, int n, int anchor) {
    std::vector<std::uint32_t> reach(std::size_t(1) << n, 0);
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    reach[std::uint32_t(1) << anchor] = std::uint32_t(1) << anchor;
    for (std::uint32_t S = std::uint32_t(1) << anchor; S <= full; ++S) {
        if (!((S >> anchor) & 1)) continue;
        std::uint32_t ends = reach[S];
        while (ends) {
            const int w = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t fresh = adj[w] & ~S;
            while (fresh) {
                const int t = std::countr_zero(fresh);
                fresh &= fresh - 1;
                reach[S | (std::uint32_t(1) << t)] |= std::uint32_t(1) << t;
            }
        }
    }
    return reach;
}

// Walk forward from u using a table anchored at the target v: the next vertex
// is the lowest-numbered neighbor of the current one that still admits a
// spanning completion of the remaining set down to v.
VertexPath extract_forward(const std::vector<std::uint32_t>& adj,
                           const std::vector<std::uint32_t>& reach_v, int n, int u) {
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    VertexPath path{u};
    path.reserve(n);
    std::uint32_t remaining = full & ~(std::uint32_t(1) << u);
    int cur = u;
    while (remaining) {
        const std::uint32_t cand = adj[cur] & reach_v[remaining];
        if (!cand) throw std::logic_error("hamiltonian witness extraction lost its invariant");
        const int t = std::countr_zero(cand);
        path.push_back(t);
        remaining &= ~(std::uint32_t(1) << t);
        cur = t;
    }
    return path;
}

}  // namespace

std::optional<VertexPath> hamiltonian_path_between(const Graph& g, int u, int v) {
    const int n = g.order();
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
    if (u == v) throw std::invalid_argument("endpoints must differ");
    check_exact_order(g);
    const auto adj = adjacency_masks(g);
    const auto reach_v = reach_table(adj, n, v);
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    if (!((reach_v[full] >> u) & 1)) return std::nullopt;
    return extract_forward(adj, reach_v, n, u);
}

std::optional<VertexPath> has_hamiltonian_path(const Graph& g) {
    const int n = g.order();
    if (n == 0) return std::nullopt;
    if (n == 1) return VertexPath{0};
    check_exact_order(g);
    const auto adj = adjacency_masks(g);
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    for (int u = 0; u < n; ++u) {
        const auto reach_u = reach_table(adj, n, u);
        const std::uint32_t ends = reach_u[full];
        if (!ends) continue;
        const int w = std::countr_zero(ends);
        return hamiltonian_path_between(g, u, w);
    }
    return std::nullopt;
}

std::optional<VertexPath> hamiltonian_cycle(const Graph& g) {
    const int n = g.order();
    if (n < 3) throw std::invalid_argument("hamiltonian cycle needs n >= 3");
    check_exact_order(g);
    const auto adj = adjacency_masks(g);
    const auto reach_0 = reach_table(adj, n, 0);
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    const std::uint32_t closing = reach_0[full] & adj[0];
    if (!closing) return std::nullopt;
    return hamiltonian_path_between(g, 0, std::countr_zero(closing));
}

HCCertificate is_hamiltonian_connected(const Graph& g) {
    HCCertificate cert;
    const int n = g.order();
    if (n < 2) return cert;
    check_exact_order(g);
    const auto adj = adjacency_masks(g);
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    for (int t = 1; t < n; ++t) {
        const auto reach_t = reach_table(adj, n, t);
        for (int s = 0; s < t; ++s) {
            if (!((reach_t[full] >> s) & 1)) {
                cert.outcome = HCCertificate::Outcome::counterexample;
                cert.bad_pair = {s, t};
                cert.witnesses.clear();
                return cert;
            }
            cert.witnesses.emplace(std::make_pair(s, t), extract_forward(adj, reach_t, n, s));
        }
    }
    cert.outcome = HCCertificate::Outcome::connected;
    return cert;
}

Graph closure(const Graph& g) {
    Graph h = g;
    const int n = h.order();
    if (n == 0) return h;
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = h.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!h.has_edge(u, v) && deg[u] + deg[v] >= n) {
                    h.add_edge(u, v);
                    ++deg[u];
                    ++deg[v];
                    changed = true;
                }
    }
    return h;
}

bool chvatal_hamiltonian_condition(const DegreeSequence& ds) {
    const int n = ds.n();
    if (n <= 3) throw std::invalid_argument("chvatal condition needs n > 3");
    for (int k = 1; 2 * k < n; ++k)
        if (!(ds.d[k - 1] >= k + 1 || ds.d[n - k - 1] >= n - k)) return false;
    return true;
}

bool path_condition(const DegreeSequence& ds) {
    const int n = ds.n();
    if (n < 2) throw std::invalid_argument("path condition needs n >= 2");
    for (int k = 1; 2 * k < n + 1; ++k)
        if (!(ds.d[k - 1] >= k || ds.d[n - k] >= n - k)) return false;
    return true;
}

bool ore_hc_condition(const Graph& g) {
    const int n = g.order();
    if (n < 3) throw std::invalid_argument("ore condition needs n >= 3");
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && deg[u] + deg[v] < n + 1) return false;
    return true;
}

}  // namespace hamlab
