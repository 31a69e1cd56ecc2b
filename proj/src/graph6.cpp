#include "hamlab/graph6.hpp"

#include <cctype>
#include <string_view>

namespace hamlab {

Graph parse_graph6(const std::string& text) {
    std::string_view s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    constexpr std::string_view kMarker = ">>graph6<<";
    if (s.substr(0, kMarker.size()) == kMarker) s.remove_prefix(kMarker.size());
    if (s.empty()) throw Graph6Error("empty graph6 string");

    const unsigned char header = static_cast<unsigned char>(s.front());
    if (header == 126) throw Graph6Error("long-form graph6 (order > 62) is not supported");
    if (header < 63 || header > 125) throw Graph6Error("malformed graph6 header byte");
    const int n = header - 63;
    s.remove_prefix(1);

    const std::size_t bits = std::size_t(n) * (n - 1) / 2;
    const std::size_t payload = (bits + 5) / 6;
    if (s.size() < payload) throw Graph6Error("truncated graph6 payload");
    if (s.size() > payload) throw Graph6Error("trailing garbage after graph6 payload");

    Graph g(n);
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const unsigned char c = static_cast<unsigned char>(s[bit / 6]);
            if (c < 63 || c > 126) throw Graph6Error("invalid graph6 payload byte");
            if (((c - 63) >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw Graph6Error("graph6 short form supports order <= 62 only");
    std::string out;
    out.reserve(1 + (std::size_t(n) * (n - 1) / 2 + 5) / 6);
    out.push_back(static_cast<char>(63 + n));
    int chunk = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    return out;
}

}  // namespace hamlab
