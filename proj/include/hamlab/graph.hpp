#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hamlab {

// Simple undirected graph on vertices 0..n-1, adjacency kept as a bit matrix.
// Self loops and parallel edges are rejected by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int u) const;
    std::vector<int> neighbors(int u) const;

    // Raw row words, (n+63)/64 per vertex, for the solvers.
    std::span<const std::uint64_t> row(int u) const;

    bool operator==(const Graph& other) const = default;

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Nondecreasing degree sequence. from_graph sorts; from_values validates.
struct DegreeSequence {
    std::vector<int> d;

    static DegreeSequence from_graph(const Graph& g);
    static DegreeSequence from_values(std::vector<int> values);

    int n() const { return static_cast<int>(d.size()); }
};

struct DistanceMatrix {
    static constexpr int kUnreachable = -1;

    int n = 0;
    std::vector<std::vector<int>> dist;  // kUnreachable marks disconnected pairs
    bool connected = false;
    int diameter = kUnreachable;  // kUnreachable when the graph is disconnected
};

struct ConnectivityProfile {
    bool connected = false;
    std::vector<int> cut_vertices;
    bool two_connected = false;  // connected, no cut vertex, order >= 3
    bool bipartite = false;
};

// Witness that g is isomorphic to its complement: uv in E(g) iff
// perm[u]perm[v] in E(complement(g)).
struct IsoCertificate {
    std::vector<int> perm;
};

Graph complement(const Graph& g);
Graph power(const Graph& g, int k);  // k in {2, 3}
// Induced subgraph on all vertices but v; ids above v shift down by one.
Graph delete_vertex(const Graph& g, int v);
DistanceMatrix distances(const Graph& g);
ConnectivityProfile connectivity(const Graph& g);
DegreeSequence degree_sequence(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool has_triangle(const Graph& g);

// Backtracking isomorphism search pruned by degree partition. Intended for
// small orders (n <= 13 or so); returns a vertex map g -> h if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);
bool isomorphic(const Graph& g, const Graph& h);

std::optional<IsoCertificate> is_self_complementary(const Graph& g);

using VertexPath = std::vector<int>;

// Universal path checker. Every constructive routine funnels its output
// through this before returning it.
struct PathVerdict {
    enum class Reason {
        ok,
        empty,
        vertex_out_of_range,
        repeated_vertex,
        missing_edge,
        not_spanning,
        wrong_endpoints,
    };

    bool ok = false;
    Reason reason = Reason::ok;
    int position = -1;  // index of the first offending entry, when applicable
    std::string message;
};

PathVerdict verify_path(const Graph& g, const VertexPath& path,
                        bool require_hamiltonian = false,
                        std::optional<std::pair<int, int>> endpoints = std::nullopt);

}  // namespace hamlab
