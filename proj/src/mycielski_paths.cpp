#include "hamlab/mycielski_paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamlab {

const char* lift_case_name(LiftCase c) {
    switch (c) {
        case LiftCase::XX: return "XX";
        case LiftCase::XY: return "XY";
        case LiftCase::XZ: return "XZ";
        case LiftCase::X1Y1: return "X1Y1";
        case LiftCase::YZ: return "YZ";
        case LiftCase::YY_ADJ: return "YY_ADJ";
        case LiftCase::YY_EVEN: return "YY_EVEN";
        case LiftCase::YY_ODD: return "YY_ODD";
    }
    return "?";
}

namespace {

// Positions along a base path are 1-indexed. A segment walks positions up or
// down while alternating between the X and Y copies; x_on_odd says which copy
// odd positions take.
struct PatternBuilder {
    const VertexPath& base;
    const MycielskiLabeling& lab;
    VertexPath out;

    int x(int pos) const { return lab.x(base[pos - 1]); }
    int y(int pos) const { return lab.y(base[pos - 1]); }
    void push(int v) { out.push_back(v); }
    void asc(int lo, int hi, bool x_on_odd) {
        for (int i = lo; i <= hi; ++i) push((i % 2 == 1) == x_on_odd ? x(i) : y(i));
    }
    void desc(int hi, int lo, bool x_on_odd) {
        for (int i = hi; i >= lo; --i) push((i % 2 == 1) == x_on_odd ? x(i) : y(i));
    }
    void z() { push(lab.z()); }
};

// Endpoints x_1 .. x_n. Needs nothing beyond the base path itself.
VertexPath pattern_xx(const VertexPath& base, const MycielskiLabeling& lab) {
    const int n = static_cast<int>(base.size());
    PatternBuilder b{base, lab, {}};
    b.asc(1, n, true);
    b.z();
    b.asc(1, n, false);
    return b.out;
}

// Endpoints x_1 .. y_n. Needs nothing beyond the base path itself.
VertexPath pattern_xy(const VertexPath& base, const MycielskiLabeling& lab) {
    const int n = static_cast<int>(base.size());
    PatternBuilder b{base, lab, {}};
    b.asc(1, n - 1, true);
    b.push(b.x(n));
    b.desc(n - 1, 1, false);
    b.z();
    b.push(b.y(n));
    return b.out;
}

// Endpoints x_1 .. z. Needs chords (1,n) and (p,n) with p even.
VertexPath pattern_xz(const VertexPath& base, const MycielskiLabeling& lab, int p) {
    const int n = static_cast<int>(base.size());
    PatternBuilder b{base, lab, {}};
    b.asc(1, n, true);
    b.desc(p, 1, false);
    b.desc(n, p + 1, false);
    b.z();
    return b.out;
}

// Endpoints x_1 .. y_1. Needs chords (1,n) and (r,n) with r even.
VertexPath pattern_x1y1(const VertexPath& base, const MycielskiLabeling& lab, int r) {
    const int n = static_cast<int>(base.size());
    PatternBuilder b{base, lab, {}};
    b.push(b.x(1));
    b.push(b.x(2));
    b.asc(3, r, false);
    b.desc(n, r + 1, true);
    b.desc(r, 2, true);
    b.z();
    b.asc(r + 1, n, false);
    b.push(b.y(1));
    return b.out;
}

// Endpoints y_1 .. z. Needs chord (1,n).
VertexPath pattern_yz(const VertexPath& base, const MycielskiLabeling& lab) {
    const int n = static_cast<int>(base.size());
    PatternBuilder b{base, lab, {}};
    b.asc(1, n, false);
    b.push(b.x(1));
    b.asc(2, n, true);
    b.z();
    return b.out;
}

// Endpoints y_1 .. y_2 with positions 1,2 adjacent on the base path. Needs
// chord (1,n).
VertexPath pattern_yy_adjacent(const VertexPath& base, const MycielskiLabeling& lab) {
    const int n = static_cast<int>(base.size());
    PatternBuilder b{base, lab, {}};
    b.push(b.y(1));
    b.push(b.x(2));
    b.asc(3, n, true);
    b.push(b.x(1));
    b.push(b.x(n));
    b.desc(n - 1, 3, false);
    b.z();
    b.push(b.y(2));
    return b.out;
}

// Endpoints y_1 .. y_p, p even. Needs chord (1,n).
VertexPath pattern_yy_even(const VertexPath& base, const MycielskiLabeling& lab, int p) {
    const int n = static_cast<int>(base.size());
    PatternBuilder b{base, lab, {}};
    b.asc(1, p, false);
    b.asc(p + 1, n - 1, true);
    b.push(b.y(n));
    b.push(b.x(1));
    b.push(b.x(n));
    b.push(b.y(n - 1));
    b.desc(n - 2, p + 1, false);
    b.z();
    b.asc(2, p, true);
    return b.out;
}

// Endpoints y_1 .. y_p, p odd. Needs chord (1,n). The p = n-1 shape reroutes
// separately because the double-pivot form would run out of positions.
VertexPath pattern_yy_odd(const VertexPath& base, const MycielskiLabeling& lab, int p) {
    const int n = static_cast<int>(base.size());
    PatternBuilder b{base, lab, {}};
    if (p == n - 1) {
        b.push(b.y(1));
        b.push(b.x(n));
        b.desc(n - 1, 2, true);
        b.z();
        b.push(b.y(n));
        b.push(b.x(1));
        b.asc(2, p, false);
        return b.out;
    }
    b.push(b.y(1));
    b.desc(n, p + 1, false);
    b.asc(p + 2, n - 1, true);
    b.push(b.y(n));
    b.z();
    b.desc(p + 1, 2, true);
    b.push(b.x(1));
    b.asc(2, p, false);
    return b.out;
}

struct LiftContext {
    const Graph& g;
    const Graph& mu;
    const MycielskiLabeling& lab;
    int n;
};

bool accepts(const LiftContext& ctx, const VertexPath& path, std::pair<int, int> endpoints) {
    return verify_path(ctx.mu, path, true, endpoints).ok;
}

// Ascending 1-indexed even positions r (2 <= r <= n-2) whose vertex is
// adjacent to the vertex at position n; with n even these are exactly the
// parity chords incident to the terminal position, which is where the XZ and
// X1Y1 splices re-enter the walk.
std::vector<int> even_chords_to_last(const Graph& g, const VertexPath& base) {
    const int n = static_cast<int>(base.size());
    std::vector<int> out;
    for (int r = 2; r <= n - 2; r += 2)
        if (g.has_edge(base[r - 1], base[n - 1])) out.push_back(r);
    return out;
}

std::optional<LiftResult> accept_pattern(const LiftContext& ctx, VertexPath path,
                                         std::pair<int, int> endpoints, LiftCase applied,
                                         VertexPath base) {
    if (!accepts(ctx, path, endpoints)) return std::nullopt;
    return LiftResult{std::move(path), "pattern", applied, std::move(base)};
}

// Hamiltonian paths of g that start at `start`, second vertex `second`, and
// end adjacent to `start`: solved in g minus start and re-prefixed.
std::optional<VertexPath> anchored_path_through(const Graph& g, int start, int second) {
    const Graph sub = delete_vertex(g, start);
    auto shrink = [start](int v) { return v > start ? v - 1 : v; };
    auto grow = [start](int v) { return v >= start ? v + 1 : v; };
    for (int l : g.neighbors(start)) {
        if (l == second) continue;
        auto found = hamiltonian_path_between(sub, shrink(second), shrink(l));
        if (!found) continue;
        VertexPath base{start};
        for (int v : *found) base.push_back(grow(v));
        return base;
    }
    return std::nullopt;
}

std::optional<LiftResult> try_xx(const LiftContext& ctx, int a, int b,
                                 std::pair<int, int> endpoints) {
    auto base = hamiltonian_path_between(ctx.g, a, b);
    if (!base) return std::nullopt;
    return accept_pattern(ctx, pattern_xx(*base, ctx.lab), endpoints, LiftCase::XX, *base);
}

std::optional<LiftResult> try_xy(const LiftContext& ctx, int xa, int yb,
                                 std::pair<int, int> endpoints) {
    auto base = hamiltonian_path_between(ctx.g, xa, yb);
    if (!base) return std::nullopt;
    return accept_pattern(ctx, pattern_xy(*base, ctx.lab), endpoints, LiftCase::XY, *base);
}

std::optional<LiftResult> try_chorded(const LiftContext& ctx, int a, LiftCase which,
                                      std::pair<int, int> endpoints) {
    for (int w : ctx.g.neighbors(a)) {
        auto base = hamiltonian_path_between(ctx.g, a, w);
        if (!base) continue;
        for (int r : even_chords_to_last(ctx.g, *base)) {
            VertexPath path = which == LiftCase::XZ ? pattern_xz(*base, ctx.lab, r)
                                                    : pattern_x1y1(*base, ctx.lab, r);
            if (auto hit = accept_pattern(ctx, std::move(path), endpoints, which, *base))
                return hit;
        }
    }
    return std::nullopt;
}

std::optional<LiftResult> try_yz(const LiftContext& ctx, int a, std::pair<int, int> endpoints) {
    for (int w : ctx.g.neighbors(a)) {
        auto base = hamiltonian_path_between(ctx.g, a, w);
        if (!base) continue;
        if (auto hit =
                accept_pattern(ctx, pattern_yz(*base, ctx.lab), endpoints, LiftCase::YZ, *base))
            return hit;
    }
    return std::nullopt;
}

std::optional<LiftResult> try_yy_adjacent(const LiftContext& ctx, int a, int b,
                                          std::pair<int, int> endpoints) {
    for (auto [first, second] : {std::pair{a, b}, std::pair{b, a}}) {
        auto base = anchored_path_through(ctx.g, first, second);
        if (!base) continue;
        if (auto hit = accept_pattern(ctx, pattern_yy_adjacent(*base, ctx.lab), endpoints,
                                      LiftCase::YY_ADJ, *base))
            return hit;
    }
    return std::nullopt;
}

std::optional<LiftResult> try_yy_parity(const LiftContext& ctx, int a, int b,
                                        std::pair<int, int> endpoints) {
    for (auto [first, second] : {std::pair{a, b}, std::pair{b, a}}) {
        for (int w : ctx.g.neighbors(first)) {
            auto base = hamiltonian_path_between(ctx.g, first, w);
            if (!base) continue;
            int p = 0;
            for (int i = 0; i < ctx.n; ++i)
                if ((*base)[i] == second) {
                    p = i + 1;
                    break;
                }
            const LiftCase applied = p % 2 == 0 ? LiftCase::YY_EVEN : LiftCase::YY_ODD;
            VertexPath path = p % 2 == 0 ? pattern_yy_even(*base, ctx.lab, p)
                                         : pattern_yy_odd(*base, ctx.lab, p);
            if (auto hit = accept_pattern(ctx, std::move(path), endpoints, applied, *base))
                return hit;
        }
    }
    return std::nullopt;
}

std::optional<LiftResult> pattern_lift(const LiftContext& ctx, LiftCase c,
                                       std::pair<int, int> endpoints) {
    if (ctx.n % 2 != 0) return std::nullopt;  // odd orders go to the fallback wholesale
    const auto [s, t] = endpoints;
    const auto& lab = ctx.lab;
    switch (c) {
        case LiftCase::XX:
            return try_xx(ctx, lab.base(s), lab.base(t), endpoints);
        case LiftCase::XY: {
            const int xa = lab.is_x(s) ? s : t;
            const int yb = lab.is_y(s) ? s : t;
            return try_xy(ctx, lab.base(xa), lab.base(yb), endpoints);
        }
        case LiftCase::XZ:
            return try_chorded(ctx, lab.base(lab.is_z(s) ? t : s), LiftCase::XZ, endpoints);
        case LiftCase::X1Y1:
            return try_chorded(ctx, lab.base(s), LiftCase::X1Y1, endpoints);
        case LiftCase::YZ:
            return try_yz(ctx, lab.base(lab.is_z(s) ? t : s), endpoints);
        case LiftCase::YY_ADJ:
            return try_yy_adjacent(ctx, lab.base(s), lab.base(t), endpoints);
        case LiftCase::YY_EVEN:
        case LiftCase::YY_ODD:
            return try_yy_parity(ctx, lab.base(s), lab.base(t), endpoints);
    }
    return std::nullopt;
}

std::optional<LiftResult> lift_pair(const LiftContext& ctx, LiftCase c,
                                    std::pair<int, int> endpoints) {
    if (auto hit = pattern_lift(ctx, c, endpoints)) return hit;
    auto direct = hamiltonian_path_between(ctx.mu, endpoints.first, endpoints.second);
    if (!direct) return std::nullopt;
    return LiftResult{std::move(*direct), "fallback", c, {}};
}

void require_case(bool ok) {
    if (!ok) throw std::invalid_argument("endpoint classes do not match the requested case");
}

LiftResult run_request(const LiftRequest& req, bool parity_family) {
    const auto [s, t] = req.endpoints;
    const auto& lab = req.labeling;
    if (lab.base_n != req.g.order())
        throw std::invalid_argument("labeling does not match the base graph");
    const int top = 2 * lab.base_n;
    if (s < 0 || t < 0 || s > top || t > top || s == t)
        throw std::invalid_argument("bad mu(G) endpoint pair");
    switch (req.case_id) {
        case LiftCase::XX:
            require_case(!parity_family && lab.is_x(s) && lab.is_x(t));
            break;
        case LiftCase::XY:
            require_case(!parity_family && ((lab.is_x(s) && lab.is_y(t)) ||
                                            (lab.is_y(s) && lab.is_x(t))) &&
                         lab.base(s) != lab.base(t));
            break;
        case LiftCase::YZ:
            require_case(!parity_family && ((lab.is_y(s) && lab.is_z(t)) ||
                                            (lab.is_z(s) && lab.is_y(t))));
            break;
        case LiftCase::YY_ADJ:
            require_case(!parity_family && lab.is_y(s) && lab.is_y(t) &&
                         req.g.has_edge(lab.base(s), lab.base(t)));
            break;
        case LiftCase::XZ:
            require_case(parity_family && ((lab.is_x(s) && lab.is_z(t)) ||
                                           (lab.is_z(s) && lab.is_x(t))));
            break;
        case LiftCase::X1Y1:
            require_case(parity_family && ((lab.is_x(s) && lab.is_y(t)) ||
                                           (lab.is_y(s) && lab.is_x(t))) &&
                         lab.base(s) == lab.base(t));
            break;
        case LiftCase::YY_EVEN:
        case LiftCase::YY_ODD:
            require_case(parity_family && lab.is_y(s) && lab.is_y(t) &&
                         !req.g.has_edge(lab.base(s), lab.base(t)));
            break;
    }
    const Graph mu = mycielski(req.g).graph;
    LiftContext ctx{req.g, mu, lab, req.g.order()};
    // X1Y1 canonicalizes on the x endpoint so lab.base(s) is the shared base.
    std::pair<int, int> endpoints = req.endpoints;
    if (req.case_id == LiftCase::X1Y1 && lab.is_y(endpoints.first))
        std::swap(endpoints.first, endpoints.second);
    auto result = lift_pair(ctx, req.case_id, endpoints);
    if (!result)
        throw std::runtime_error("no hamiltonian path in mu(G); the base graph is not hamiltonian-connected");
    return std::move(*result);
}

}  // namespace

VertexPath prop7_path(int n) {
    if (n < 2) throw std::invalid_argument("prop7 path needs n >= 2");
    VertexPath base(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    const MycielskiLabeling lab{n};
    PatternBuilder b{base, lab, {}};
    if (n % 2 == 0) {
        b.asc(1, n, true);
        b.z();
        b.asc(1, n, false);
    } else {
        b.asc(1, n - 1, true);
        b.push(b.x(n));
        b.push(b.x(n - 1));
        b.push(b.y(n));
        b.z();
        b.push(b.y(1));
        b.asc(2, n - 2, false);
    }
    const Graph mu = mycielski(standard_graph(StandardKind::path, n)).graph;
    if (!verify_path(mu, b.out, true).ok)
        throw std::logic_error("prop7 formula produced an invalid path");
    return b.out;
}

std::optional<std::pair<int, int>> find_parity_chord(const Graph& g, const VertexPath& base) {
    if (!verify_path(g, base, true).ok)
        throw std::invalid_argument("base is not a hamiltonian path of the graph");
    const int n = static_cast<int>(base.size());
    for (int start : {1, 0})  // odd positions first
        for (int r = start; r < n; r += 2)
            for (int s = r + 2; s < n; s += 2)
                if (g.has_edge(base[r], base[s])) return std::make_pair(r, s);
    return std::nullopt;
}

LiftResult lift_direct(const LiftRequest& req) {
    switch (req.case_id) {
        case LiftCase::XX:
        case LiftCase::XY:
        case LiftCase::YZ:
        case LiftCase::YY_ADJ:
            return run_request(req, false);
        default:
            throw std::invalid_argument("lift_direct handles XX, XY, YZ, YY_ADJ only");
    }
}

LiftResult lift_parity(const LiftRequest& req) {
    switch (req.case_id) {
        case LiftCase::XZ:
        case LiftCase::X1Y1:
        case LiftCase::YY_EVEN:
        case LiftCase::YY_ODD:
            return run_request(req, true);
        default:
            throw std::invalid_argument("lift_parity handles XZ, X1Y1, YY_EVEN, YY_ODD only");
    }
}

LiftCase classify_pair(const Graph& g, const MycielskiLabeling& lab, int s, int t) {
    if (lab.base_n != g.order()) throw std::invalid_argument("labeling does not match the graph");
    const int top = 2 * lab.base_n;
    if (s < 0 || t < 0 || s > top || t > top || s == t)
        throw std::invalid_argument("bad mu(G) endpoint pair");
    if (lab.is_z(s) || lab.is_z(t)) {
        const int other = lab.is_z(s) ? t : s;
        return lab.is_x(other) ? LiftCase::XZ : LiftCase::YZ;
    }
    if (lab.is_x(s) && lab.is_x(t)) return LiftCase::XX;
    if (lab.is_y(s) && lab.is_y(t)) {
        return g.has_edge(lab.base(s), lab.base(t)) ? LiftCase::YY_ADJ : LiftCase::YY_EVEN;
    }
    return lab.base(s) == lab.base(t) ? LiftCase::X1Y1 : LiftCase::XY;
}

MycielskiHCReport mycielski_hc_certificate(const Graph& g) {
    const int n = g.order();
    if (n < 3)
        throw std::invalid_argument("mycielski lifting needs order >= 3 (K_2 and below rejected)");
    MycielskiHCReport report;
    const auto base_cert = is_hamiltonian_connected(g);
    if (base_cert.outcome != HCCertificate::Outcome::connected) {
        report.base_failure = base_cert.bad_pair;
        return report;
    }
    const auto [mu, lab] = mycielski(g);
    const LiftContext ctx{g, mu, lab, n};
    const int mu_n = mu.order();
    if (n % 2 != 0) {
        // Odd orders: the exact solver supplies every pair; identical paths to
        // per-pair fallback calls, at a fraction of the table builds.
        report.certificate = is_hamiltonian_connected(mu);
        if (report.certificate.outcome == HCCertificate::Outcome::connected)
            report.method_tally["fallback"] = mu_n * (mu_n - 1) / 2;
        return report;
    }
    for (int t = 1; t < mu_n; ++t) {
        for (int s = 0; s < t; ++s) {
            const LiftCase c = classify_pair(g, lab, s, t);
            std::pair<int, int> endpoints{s, t};
            if (c == LiftCase::X1Y1 && lab.is_y(s)) endpoints = {t, s};
            auto result = lift_pair(ctx, c, endpoints);
            if (!result) {
                report.certificate.outcome = HCCertificate::Outcome::counterexample;
                report.certificate.bad_pair = {s, t};
                report.certificate.witnesses.clear();
                report.method_tally.clear();
                return report;
            }
            if (result->path.front() != s)  // witness contract: min endpoint first
                std::reverse(result->path.begin(), result->path.end());
            report.certificate.witnesses.emplace(std::make_pair(s, t), std::move(result->path));
            ++report.method_tally[result->method == "fallback"
                                      ? "fallback"
                                      : lift_case_name(result->applied)];
        }
    }
    report.certificate.outcome = HCCertificate::Outcome::connected;
    return report;
}

}  // namespace hamlab
