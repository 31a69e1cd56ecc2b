#include "hamlab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace hamlab {

namespace {

// Iso-invariant bucket key: order, size, sorted degrees, sorted per-vertex
// triangle counts, hashed together.
std::uint64_t fingerprint(const Graph& g) {
    const int n = g.order();
    std::vector<int> degrees(n), triangles(n, 0);
    for (int v = 0; v < n; ++v) degrees[v] = g.degree(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            for (int w = v + 1; w < n; ++w)
                if (g.has_edge(u, w) && g.has_edge(v, w)) {
                    ++triangles[u];
                    ++triangles[v];
                    ++triangles[w];
                }
        }
    std::sort(degrees.begin(), degrees.end());
    std::sort(triangles.begin(), triangles.end());
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(n);
    auto mix = [&h](std::uint64_t value) {
        h ^= value + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(g.size()));
    for (int d : degrees) mix(static_cast<std::uint64_t>(d));
    for (int t : triangles) mix(static_cast<std::uint64_t>(t) | (1ull << 32));
    return h;
}

struct ClassCollector {
    std::vector<Graph> classes;
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;

    void offer(const Graph& g) {
        const std::uint64_t key = fingerprint(g);
        auto& bucket = buckets[key];
        for (int idx : bucket)
            if (isomorphic(classes[idx], g)) return;
        bucket.push_back(static_cast<int>(classes.size()));
        classes.push_back(g);
    }
};

Graph extend(const Graph& g, std::uint32_t attach) {
    const int n = g.order();
    Graph h(n + 1);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (v > u) h.add_edge(u, v);
    for (int u = 0; u < n; ++u)
        if ((attach >> u) & 1) h.add_edge(u, n);
    return h;
}

std::vector<Graph> next_level(const std::vector<Graph>& prev, int prev_n) {
    ClassCollector out;
    const std::uint32_t limit = std::uint32_t(1) << prev_n;
    for (const Graph& g : prev)
        for (std::uint32_t attach = 0; attach < limit; ++attach) out.offer(extend(g, attach));
    return std::move(out.classes);
}

std::mutex cache_mutex;
std::map<int, std::vector<Graph>>& level_cache() {
    static std::map<int, std::vector<Graph>> cache{{1, {Graph(1)}}};
    return cache;
}

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > 8) throw std::invalid_argument("full enumeration supported up to n = 8");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& cache = level_cache();
    int have = cache.rbegin()->first;
    while (have < n) {
        cache[have + 1] = next_level(cache[have], have);
        ++have;
    }
    return cache[n];
}

std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

std::vector<Graph> self_complementary_graphs(int n) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n % 4 != 0 && n % 4 != 1) return {};
    if (n <= 8) {
        std::vector<Graph> out;
        for (const Graph& g : all_graphs(n))
            if (is_self_complementary(g)) out.push_back(g);
        return out;
    }
    if (n != 9) throw std::invalid_argument("self-complementary enumeration supported up to n = 9");
    // Extend every 8-vertex class, but keep only attachments that land on the
    // required edge count, then filter hard before touching the dedup table.
    const int target_edges = n * (n - 1) / 4;  // 18
    const auto& prev = all_graphs(8);
    ClassCollector out;
    for (const Graph& g : prev) {
        const int need = target_edges - g.size();
        if (need < 0 || need > 8) continue;
        for (std::uint32_t attach = 0; attach < (1u << 8); ++attach) {
            if (std::popcount(attach) != need) continue;
            Graph h = extend(g, attach);
            auto ds = degree_sequence(h).d;
            bool palindromic = true;
            for (int k = 0; k < n; ++k)
                if (ds[k] + ds[n - 1 - k] != n - 1) {
                    palindromic = false;
                    break;
                }
            if (!palindromic) continue;
            if (!is_self_complementary(h)) continue;
            out.offer(h);
        }
    }
    return std::move(out.classes);
}

}  // namespace hamlab
