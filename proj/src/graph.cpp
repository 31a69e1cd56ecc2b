#include "hamlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace hamlab {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("vertex id out of range");
    if (u == v) throw std::invalid_argument("self loops are not allowed");
}

bool Graph::has_edge(int u, int v) const {
    check_pair(u, v);
    return (bits_[std::size_t(u) * words_ + v / 64] >> (v % 64)) & 1;
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    bits_[std::size_t(u) * words_ + v / 64] |= std::uint64_t(1) << (v % 64);
    bits_[std::size_t(v) * words_ + u / 64] |= std::uint64_t(1) << (u % 64);
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    bits_[std::size_t(u) * words_ + v / 64] &= ~(std::uint64_t(1) << (v % 64));
    bits_[std::size_t(v) * words_ + u / 64] &= ~(std::uint64_t(1) << (u % 64));
}

int Graph::size() const {
    std::int64_t total = 0;
    for (auto w : bits_) total += std::popcount(w);
    return static_cast<int>(total / 2);
}

int Graph::degree(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("vertex id out of range");
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(bits_[std::size_t(u) * words_ + w]);
    return d;
}

std::vector<int> Graph::neighbors(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("vertex id out of range");
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t word = bits_[std::size_t(u) * words_ + w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(w * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

std::span<const std::uint64_t> Graph::row(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("vertex id out of range");
    return {bits_.data() + std::size_t(u) * words_, std::size_t(words_)};
}

DegreeSequence DegreeSequence::from_graph(const Graph& g) {
    DegreeSequence ds;
    ds.d.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) ds.d.push_back(g.degree(v));
    std::sort(ds.d.begin(), ds.d.end());
    return ds;
}

DegreeSequence DegreeSequence::from_values(std::vector<int> values) {
    const int n = static_cast<int>(values.size());
    if (!std::is_sorted(values.begin(), values.end()))
        throw std::invalid_argument("degree sequence must be nondecreasing");
    for (int d : values)
        if (d < 0 || d >= std::max(n, 1))
            throw std::invalid_argument("degree out of range");
    if (std::accumulate(values.begin(), values.end(), 0) % 2 != 0)
        throw std::invalid_argument("degree sum must be even");
    return DegreeSequence{std::move(values)};
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

Graph delete_vertex(const Graph& g, int v) {
    const int n = g.order();
    if (v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
    Graph h(n - 1);
    for (int a = 0; a < n; ++a) {
        if (a == v) continue;
        for (int b = a + 1; b < n; ++b) {
            if (b == v || !g.has_edge(a, b)) continue;
            h.add_edge(a < v ? a : a - 1, b < v ? b : b - 1);
        }
    }
    return h;
}

DistanceMatrix distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm;
    dm.n = n;
    dm.dist.assign(n, std::vector<int>(n, DistanceMatrix::kUnreachable));
    int diameter = 0;
    bool connected = n > 0;
    for (int s = 0; s < n; ++s) {
        auto& row = dm.dist[s];
        row[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (row[v] == DistanceMatrix::kUnreachable) {
                    row[v] = row[u] + 1;
                    q.push(v);
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (row[v] == DistanceMatrix::kUnreachable)
                connected = false;
            else
                diameter = std::max(diameter, row[v]);
        }
    }
    dm.connected = connected;
    dm.diameter = connected ? diameter : DistanceMatrix::kUnreachable;
    return dm;
}

namespace {

int count_reachable(const Graph& g, int start, int skip) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    seen[start] = 1;
    if (skip >= 0) seen[skip] = 1;
    std::vector<int> stack{start};
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count;
}

}  // namespace

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    return count_reachable(g, 0, -1) == n;
}

bool is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (side[v] == -1) {
                    side[v] = side[u] ^ 1;
                    q.push(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool has_triangle(const Graph& g) {
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            for (int w = v + 1; w < n; ++w)
                if (g.has_edge(u, w) && g.has_edge(v, w)) return true;
        }
    return false;
}

ConnectivityProfile connectivity(const Graph& g) {
    const int n = g.order();
    ConnectivityProfile p;
    p.connected = is_connected(g);
    p.bipartite = is_bipartite(g);
    if (p.connected && n >= 3) {
        for (int v = 0; v < n; ++v) {
            int start = v == 0 ? 1 : 0;
            if (count_reachable(g, start, v) != n - 1) p.cut_vertices.push_back(v);
        }
    }
    p.two_connected = p.connected && n >= 3 && p.cut_vertices.empty();
    return p;
}

DegreeSequence degree_sequence(const Graph& g) { return DegreeSequence::from_graph(g); }

Graph power(const Graph& g, int k) {
    if (k != 2 && k != 3) throw std::invalid_argument("power supports k = 2 or 3 only");
    const auto dm = distances(g);
    const int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int d = dm.dist[u][v];
            if (d != DistanceMatrix::kUnreachable && d <= k) h.add_edge(u, v);
        }
    return h;
}

namespace {

// Map vertices of g onto h one at a time, candidates restricted to equal
// degree, edges checked against all previously placed vertices.
bool extend_isomorphism(const Graph& g, const Graph& h, std::vector<int>& map,
                        std::vector<char>& used, int next) {
    const int n = g.order();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand] || h.degree(cand) != g.degree(next)) continue;
        bool fits = true;
        for (int prev = 0; prev < next; ++prev) {
            if (g.has_edge(prev, next) != h.has_edge(map[prev], cand)) {
                fits = false;
                break;
            }
        }
        if (!fits) continue;
        map[next] = cand;
        used[cand] = 1;
        if (extend_isomorphism(g, h, map, used, next + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return std::nullopt;
    if (g.size() != h.size()) return std::nullopt;
    auto dg = degree_sequence(g).d;
    auto dh = degree_sequence(h).d;
    if (dg != dh) return std::nullopt;
    const int n = g.order();
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    if (extend_isomorphism(g, h, map, used, 0)) return map;
    return std::nullopt;
}

bool isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

std::optional<IsoCertificate> is_self_complementary(const Graph& g) {
    const int n = g.order();
    if (n % 4 != 0 && n % 4 != 1) return std::nullopt;
    if (std::int64_t(g.size()) * 4 != std::int64_t(n) * (n - 1)) return std::nullopt;
    // Degree identity of self-complementary graphs: d_k + d_{n+1-k} = n-1
    // (1-indexed into the sorted sequence).
    auto ds = degree_sequence(g).d;
    for (int k = 0; k < n; ++k)
        if (ds[k] + ds[n - 1 - k] != n - 1) return std::nullopt;
    auto perm = find_isomorphism(g, complement(g));
    if (!perm) return std::nullopt;
    return IsoCertificate{std::move(*perm)};
}

PathVerdict verify_path(const Graph& g, const VertexPath& path, bool require_hamiltonian,
                        std::optional<std::pair<int, int>> endpoints) {
    PathVerdict v;
    auto fail = [&](PathVerdict::Reason r, int pos, std::string msg) {
        v.ok = false;
        v.reason = r;
        v.position = pos;
        v.message = std::move(msg);
        return v;
    };
    const int n = g.order();
    if (path.empty()) return fail(PathVerdict::Reason::empty, -1, "path is empty");
    std::vector<char> seen(n, 0);
    for (int i = 0; i < static_cast<int>(path.size()); ++i) {
        int u = path[i];
        if (u < 0 || u >= n)
            return fail(PathVerdict::Reason::vertex_out_of_range, i,
                        "vertex " + std::to_string(u) + " out of range");
        if (seen[u])
            return fail(PathVerdict::Reason::repeated_vertex, i,
                        "vertex " + std::to_string(u) + " repeated");
        seen[u] = 1;
        if (i > 0 && !g.has_edge(path[i - 1], u))
            return fail(PathVerdict::Reason::missing_edge, i,
                        "no edge " + std::to_string(path[i - 1]) + "-" + std::to_string(u));
    }
    if (require_hamiltonian && static_cast<int>(path.size()) != n)
        return fail(PathVerdict::Reason::not_spanning, static_cast<int>(path.size()) - 1,
                    "path covers " + std::to_string(path.size()) + " of " + std::to_string(n) +
                        " vertices");
    if (endpoints) {
        auto [a, b] = *endpoints;
        int front = path.front(), back = path.back();
        bool match = (front == a && back == b) || (front == b && back == a);
        if (!match)
            return fail(PathVerdict::Reason::wrong_endpoints, 0,
                        "endpoints (" + std::to_string(front) + ", " + std::to_string(back) +
                            ") do not match (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    v.ok = true;
    v.reason = PathVerdict::Reason::ok;
    v.position = -1;
    return v;
}

}  // namespace hamlab
