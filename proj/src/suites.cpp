#include "hamlab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "hamlab/coloring.hpp"
#include "hamlab/constructions.hpp"
#include "hamlab/enumerate.hpp"
#include "hamlab/graph6.hpp"
#include "hamlab/hamiltonian.hpp"
#include "hamlab/mycielski_paths.hpp"
#include "hamlab/parallel.hpp"
#include "hamlab/version.hpp"

namespace hamlab {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ordered_json base_report(const char* mode) {
    ordered_json report;
    report["schema"] = 1;
    report["tool"] = "hamlab";
    report["version"] = kVersion;
    report["mode"] = mode;
    return report;
}

void stamp(ordered_json& report, bool timestamp, Clock::time_point start) {
    if (!timestamp) return;
    report["timestamp"] = utc_timestamp();
    report["wall_time_ms"] = static_cast<long long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<Graph> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus file: " + path);
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trimmed(line).empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const Graph6Error& e) {
            throw InputError("corpus line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

ordered_json pair_json(std::pair<int, int> p) { return ordered_json::array({p.first, p.second}); }

ordered_json witness_list(const HCCertificate& cert) {
    ordered_json arr = ordered_json::array();
    for (const auto& [pr, path] : cert.witnesses) {
        ordered_json w;
        w["pair"] = pair_json(pr);
        w["path"] = path;
        arr.push_back(std::move(w));
    }
    return arr;
}

ordered_json tally_json(const std::map<std::string, int>& tally) {
    ordered_json obj = ordered_json::object();
    for (const auto& [name, count] : tally) obj[name] = count;
    return obj;
}

// Per-graph work product: the instance entry plus any counterexamples it
// raised. Workers fill slot i; aggregation walks slots in input order so the
// report layout never depends on thread scheduling.
struct Row {
    ordered_json instance;
    std::vector<ordered_json> counterexamples;
};

SuiteResult finish_suite(ordered_json report, ordered_json instances, ordered_json counterexamples,
                         ordered_json summary, bool timestamp, Clock::time_point start) {
    const bool pass = counterexamples.empty();
    report["instances"] = std::move(instances);
    report["counterexamples"] = std::move(counterexamples);
    report["summary"] = std::move(summary);
    report["verdict"] = pass ? "pass" : "fail";
    stamp(report, timestamp, start);
    return SuiteResult{std::move(report), pass ? 0 : 1};
}

int default_or(int value, int fallback) { return value == -1 ? fallback : value; }

void require_range(int value, int lo, int hi, const std::string& what) {
    if (value < lo || value > hi)
        throw InputError(what + " out of range (" + std::to_string(lo) + ".." +
                         std::to_string(hi) + ")");
}

// ---------------------------------------------------------------------------
// theorem5: self-complementary families. Every graph must be isomorphic to
// its complement (permutation witness); orders above 3 need a hamiltonian
// path; orders 5 and up need diameter 2 or 3 and a hamiltonian-connected
// square. Built-in corpora also pin the per-order class counts.

const std::map<int, int>& expected_sc_counts() {
    static const std::map<int, int> counts{{1, 1}, {4, 1}, {5, 2}, {8, 10}, {9, 36}};
    return counts;
}

Row theorem5_row(const Graph& g, int idx) {
    Row row;
    const int n = g.order();
    const std::string g6 = emit_graph6(g);
    ordered_json& inst = row.instance;
    inst["index"] = idx;
    inst["graph6"] = g6;
    inst["n"] = n;
    auto cx = [&](const char* check, const char* module) -> ordered_json& {
        ordered_json c;
        c["check"] = check;
        c["graph6"] = g6;
        c["module"] = module;
        row.counterexamples.push_back(std::move(c));
        return row.counterexamples.back();
    };

    const auto perm = find_isomorphism(g, complement(g));
    if (perm) {
        inst["permutation"] = *perm;
    } else {
        inst["permutation"] = nullptr;
        cx("self-complementary", "graph-core");
    }

    if (n > 3) {
        const auto path = has_hamiltonian_path(g);
        if (path) {
            inst["hamiltonian_path"] = *path;
        } else {
            inst["hamiltonian_path"] = nullptr;
            cx("hamiltonian-path", "hamiltonian");
        }
    } else {
        inst["hamiltonian_path"] = nullptr;
    }

    const int diam = distances(g).diameter;
    inst["diameter"] = diam;
    if (n >= 5 && diam != 2 && diam != 3) {
        auto& c = cx("diameter", "graph-core");
        c["diameter"] = diam;
    }

    if (n >= 5) {
        const Graph sq = power(g, 2);
        const auto cert = is_hamiltonian_connected(sq);
        ordered_json sqj;
        sqj["graph6"] = emit_graph6(sq);
        sqj["pairs"] = n * (n - 1) / 2;
        if (cert.outcome == HCCertificate::Outcome::connected) {
            sqj["witnesses"] = witness_list(cert);
        } else {
            sqj["witnesses"] = nullptr;
            auto& c = cx("square-hamiltonian-connected", "hamiltonian");
            c["bad_pair"] = pair_json(cert.bad_pair);
        }
        inst["square"] = std::move(sqj);
    } else {
        inst["square"] = nullptr;
    }
    return row;
}

SuiteResult suite_theorem5(const SuiteOptions& opts, Clock::time_point start) {
    ordered_json report = base_report("suite");
    report["suite"] = "theorem5";
    const int jobs = std::max(1, opts.jobs);
    ordered_json options;
    options["n"] = opts.only_n == -1 ? ordered_json(nullptr) : ordered_json(opts.only_n);
    options["jobs"] = jobs;
    options["corpus"] = opts.corpus.empty() ? ordered_json(nullptr) : ordered_json(opts.corpus);
    report["options"] = std::move(options);

    std::vector<Graph> corpus;
    std::string source;
    std::vector<int> orders;
    ordered_json counterexamples = ordered_json::array();
    std::map<int, int> found_by_order;
    const bool builtin = opts.corpus.empty();
    if (builtin) {
        if (opts.only_n != -1) {
            require_range(opts.only_n, 1, 9, "--n");
            orders = {opts.only_n};
        } else {
            orders = {4, 5, 8, 9};
        }
        source = "built-in enumeration";
        for (int n : orders) {
            const auto classes = self_complementary_graphs(n);
            found_by_order[n] = static_cast<int>(classes.size());
            const auto it = expected_sc_counts().find(n);
            const int expected = it == expected_sc_counts().end() ? 0 : it->second;
            if (static_cast<int>(classes.size()) != expected) {
                ordered_json c;
                c["check"] = "enumeration-count";
                c["graph6"] = nullptr;
                c["order"] = n;
                c["found"] = static_cast<int>(classes.size());
                c["expected"] = expected;
                c["module"] = "harness-cli";
                counterexamples.push_back(std::move(c));
            }
            for (const Graph& g : classes) corpus.push_back(g);
        }
    } else {
        corpus = load_corpus(opts.corpus);
        source = opts.corpus;
        for (const Graph& g : corpus) ++found_by_order[g.order()];
        for (const auto& [n, cnt] : found_by_order) orders.push_back(n);
    }

    ordered_json inputs;
    inputs["count"] = static_cast<int>(corpus.size());
    inputs["source"] = source;
    report["inputs"] = std::move(inputs);

    std::vector<Row> rows(corpus.size());
    parallel_for(static_cast<int>(corpus.size()), jobs,
                 [&](int i) { rows[i] = theorem5_row(corpus[i], i); });

    ordered_json instances = ordered_json::array();
    for (auto& row : rows) {
        instances.push_back(std::move(row.instance));
        for (auto& c : row.counterexamples) counterexamples.push_back(std::move(c));
    }

    ordered_json summary;
    summary["orders"] = orders;
    ordered_json counts = ordered_json::object();
    for (const auto& [n, cnt] : found_by_order) counts[std::to_string(n)] = cnt;
    summary["count_by_order"] = std::move(counts);
    if (builtin) {
        ordered_json expected = ordered_json::object();
        for (int n : orders) {
            const auto it = expected_sc_counts().find(n);
            expected[std::to_string(n)] = it == expected_sc_counts().end() ? 0 : it->second;
        }
        summary["expected_by_order"] = std::move(expected);
    } else {
        summary["expected_by_order"] = nullptr;
    }
    summary["graphs"] = static_cast<int>(corpus.size());
    return finish_suite(std::move(report), std::move(instances), std::move(counterexamples),
                        std::move(summary), opts.timestamp, start);
}

// ---------------------------------------------------------------------------
// theorem9: iterated mycielskians M_2..M_max_k have chromatic number k and
// every single-vertex and single-edge deletion drops it to k-1.

SuiteResult suite_theorem9(const SuiteOptions& opts, Clock::time_point start) {
    ordered_json report = base_report("suite");
    report["suite"] = "theorem9";
    const int max_k = default_or(opts.max_k, 5);
    require_range(max_k, 2, 5, "--max-k");
    const int jobs = std::max(1, opts.jobs);
    ordered_json options;
    options["max_k"] = max_k;
    options["jobs"] = jobs;
    report["options"] = std::move(options);
    ordered_json inputs;
    inputs["count"] = max_k - 1;
    inputs["source"] = "iterated mycielskian ladder";
    report["inputs"] = std::move(inputs);

    ordered_json instances = ordered_json::array();
    ordered_json counterexamples = ordered_json::array();
    bool all_chromatic = true;
    bool all_critical = true;
    for (int k = 2; k <= max_k; ++k) {
        const Graph mk = iterated_mycielski(k);
        const std::string g6 = emit_graph6(mk);
        const auto chi_cert = chromatic_number(mk);
        const auto crit = criticality_report(mk, jobs);
        ordered_json inst;
        inst["k"] = k;
        inst["graph6"] = g6;
        inst["n"] = mk.order();
        inst["m"] = mk.size();
        inst["chi"] = chi_cert.k;
        inst["coloring"] = chi_cert.colors;
        inst["critical"] = crit.verdict;
        inst["per_vertex"] = crit.per_vertex;
        ordered_json edges = ordered_json::array();
        for (const auto& [u, v, chi] : crit.per_edge)
            edges.push_back(ordered_json::array({u, v, chi}));
        inst["per_edge"] = std::move(edges);
        instances.push_back(std::move(inst));

        if (chi_cert.k != k) {
            all_chromatic = false;
            ordered_json c;
            c["check"] = "chromatic";
            c["graph6"] = g6;
            c["k"] = k;
            c["chi"] = chi_cert.k;
            c["module"] = "coloring";
            counterexamples.push_back(std::move(c));
        }
        if (!crit.verdict) {
            all_critical = false;
            ordered_json c;
            c["check"] = "critical";
            c["graph6"] = g6;
            c["k"] = k;
            for (int v = 0; v < mk.order(); ++v)
                if (crit.per_vertex[v] != crit.chi - 1) {
                    c["vertex"] = v;
                    c["chi_after"] = crit.per_vertex[v];
                    break;
                }
            if (!c.contains("vertex"))
                for (const auto& [u, v, chi] : crit.per_edge)
                    if (chi != crit.chi - 1) {
                        c["edge"] = ordered_json::array({u, v});
                        c["chi_after"] = chi;
                        break;
                    }
            c["module"] = "coloring";
            counterexamples.push_back(std::move(c));
        }
    }

    ordered_json summary;
    summary["max_k"] = max_k;
    summary["all_chromatic_match"] = all_chromatic;
    summary["all_critical"] = all_critical;
    return finish_suite(std::move(report), std::move(instances), std::move(counterexamples),
                        std::move(summary), opts.timestamp, start);
}

// ---------------------------------------------------------------------------
// theorem11: every hamiltonian-connected graph in the corpus lifts to a
// hamiltonian-connected mycielskian, certified pairwise by the case engine
// and cross-checked against the exact solver.

Row theorem11_row(const Graph& g, int idx) {
    Row row;
    const int n = g.order();
    const std::string g6 = emit_graph6(g);
    const Graph mu = mycielski(g).graph;
    const auto rep = mycielski_hc_certificate(g);
    const auto cross = is_hamiltonian_connected(mu);
    const bool connected = rep.certificate.outcome == HCCertificate::Outcome::connected;
    const bool agree =
        rep.certificate.outcome == cross.outcome &&
        (connected || rep.certificate.bad_pair == cross.bad_pair);
    bool witnesses_ok = true;
    std::pair<int, int> bad_witness{-1, -1};
    for (const auto& [pr, path] : rep.certificate.witnesses)
        if (!verify_path(mu, path, true, pr).ok) {
            witnesses_ok = false;
            bad_witness = pr;
            break;
        }

    ordered_json& inst = row.instance;
    inst["index"] = idx;
    inst["graph6"] = g6;
    inst["n"] = n;
    inst["mu_graph6"] = emit_graph6(mu);
    inst["mu_n"] = mu.order();
    inst["outcome"] = connected ? "connected" : "counterexample";
    inst["agreement"] = agree;
    inst["methods"] = tally_json(rep.method_tally);
    inst["witnesses"] = witness_list(rep.certificate);

    auto cx = [&](const char* check) -> ordered_json& {
        ordered_json c;
        c["check"] = check;
        c["graph6"] = g6;
        c["module"] = "mycielski-paths";
        row.counterexamples.push_back(std::move(c));
        return row.counterexamples.back();
    };
    if (!connected) {
        auto& c = cx("lift-certificate");
        if (rep.base_failure)
            c["base_bad_pair"] = pair_json(*rep.base_failure);
        else
            c["bad_pair"] = pair_json(rep.certificate.bad_pair);
    }
    if (!agree) {
        auto& c = cx("solver-agreement");
        c["engine_outcome"] = connected ? "connected" : "counterexample";
        c["solver_outcome"] =
            cross.outcome == HCCertificate::Outcome::connected ? "connected" : "counterexample";
    }
    if (!witnesses_ok) {
        auto& c = cx("witness-verification");
        c["pair"] = pair_json(bad_witness);
    }
    return row;
}

SuiteResult suite_theorem11(const SuiteOptions& opts, Clock::time_point start) {
    ordered_json report = base_report("suite");
    report["suite"] = "theorem11";
    const int max_n = default_or(opts.max_n, 6);
    require_range(max_n, 3, 7, "--max-n");
    const int jobs = std::max(1, opts.jobs);
    ordered_json options;
    options["max_n"] = max_n;
    options["jobs"] = jobs;
    options["corpus"] = opts.corpus.empty() ? ordered_json(nullptr) : ordered_json(opts.corpus);
    report["options"] = std::move(options);

    std::vector<Graph> corpus;
    std::string source;
    int filtered_out = 0;
    if (opts.corpus.empty()) {
        source = "built-in enumeration";
        for (int n = 3; n <= max_n; ++n)
            for (const Graph& g : connected_graphs(n)) {
                if (is_hamiltonian_connected(g).outcome == HCCertificate::Outcome::connected)
                    corpus.push_back(g);
                else
                    ++filtered_out;
            }
    } else {
        source = opts.corpus;
        for (const Graph& g : load_corpus(opts.corpus)) {
            if (g.order() < 3) {
                ++filtered_out;
                continue;
            }
            if (2 * g.order() + 1 > 24)
                throw InputError("corpus graph exceeds the exact cross-check bound (order 11)");
            if (is_hamiltonian_connected(g).outcome == HCCertificate::Outcome::connected)
                corpus.push_back(g);
            else
                ++filtered_out;
        }
    }

    ordered_json inputs;
    inputs["count"] = static_cast<int>(corpus.size());
    inputs["source"] = source;
    inputs["filtered_out"] = filtered_out;
    report["inputs"] = std::move(inputs);

    std::vector<Row> rows(corpus.size());
    parallel_for(static_cast<int>(corpus.size()), jobs,
                 [&](int i) { rows[i] = theorem11_row(corpus[i], i); });

    ordered_json instances = ordered_json::array();
    ordered_json counterexamples = ordered_json::array();
    std::map<std::string, long long> by_case;
    long long even_pattern = 0, even_fallback = 0, odd_fallback = 0;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        const bool even = corpus[i].order() % 2 == 0;
        for (const auto& [name, count] : rows[i].instance["methods"].items()) {
            const long long c = count.get<long long>();
            by_case[name] += c;
            if (name == "fallback")
                (even ? even_fallback : odd_fallback) += c;
            else
                even_pattern += c;
        }
        instances.push_back(std::move(rows[i].instance));
        for (auto& c : rows[i].counterexamples) counterexamples.push_back(std::move(c));
    }

    ordered_json summary;
    summary["max_n"] = max_n;
    summary["graphs"] = static_cast<int>(corpus.size());
    ordered_json cases = ordered_json::object();
    for (const auto& [name, count] : by_case) cases[name] = count;
    summary["by_case"] = std::move(cases);
    summary["even_pattern"] = even_pattern;
    summary["even_fallback"] = even_fallback;
    summary["odd_fallback"] = odd_fallback;
    summary["pattern_rate"] =
        even_pattern + even_fallback == 0
            ? ordered_json(nullptr)
            : ordered_json(static_cast<double>(even_pattern) /
                           static_cast<double>(even_pattern + even_fallback));
    return finish_suite(std::move(report), std::move(instances), std::move(counterexamples),
                        std::move(summary), opts.timestamp, start);
}

// ---------------------------------------------------------------------------
// prop7: the closed-form hamiltonian path of mu(P_n) for n = 2..max_n, each
// re-verified by the path checker with the formula's endpoints.

SuiteResult suite_prop7(const SuiteOptions& opts, Clock::time_point start) {
    ordered_json report = base_report("suite");
    report["suite"] = "prop7";
    const int max_n = default_or(opts.max_n, 12);
    require_range(max_n, 2, 30, "--max-n");
    ordered_json options;
    options["max_n"] = max_n;
    report["options"] = std::move(options);
    ordered_json inputs;
    inputs["count"] = max_n - 1;
    inputs["source"] = "path graphs P_2..P_" + std::to_string(max_n);
    report["inputs"] = std::move(inputs);

    ordered_json instances = ordered_json::array();
    ordered_json counterexamples = ordered_json::array();
    int verified = 0;
    for (int n = 2; n <= max_n; ++n) {
        const Graph mu = mycielski(standard_graph(StandardKind::path, n)).graph;
        const std::string mu6 = emit_graph6(mu);
        const int want_end = n % 2 == 0 ? n - 1 : 2 * n - 3;
        ordered_json inst;
        inst["n"] = n;
        inst["mu_graph6"] = mu6;
        std::string failure;
        VertexPath path;
        try {
            path = prop7_path(n);
        } catch (const std::exception& e) {
            failure = e.what();
        }
        if (failure.empty()) {
            const auto verdict = verify_path(mu, path, true, std::make_pair(0, want_end));
            if (!verdict.ok)
                failure = verdict.message;
            else if (static_cast<int>(path.size()) != 2 * n + 1)
                failure = "wrong length";
        }
        inst["path"] = failure.empty() ? ordered_json(path) : ordered_json(nullptr);
        inst["endpoints"] = ordered_json::array({0, want_end});
        inst["length"] = 2 * n + 1;
        inst["verified"] = failure.empty();
        instances.push_back(std::move(inst));
        if (failure.empty()) {
            ++verified;
        } else {
            ordered_json c;
            c["check"] = "formula-path";
            c["graph6"] = mu6;
            c["n"] = n;
            c["reason"] = failure;
            c["module"] = "mycielski-paths";
            counterexamples.push_back(std::move(c));
        }
    }

    ordered_json summary;
    summary["max_n"] = max_n;
    summary["paths_verified"] = verified;
    return finish_suite(std::move(report), std::move(instances), std::move(counterexamples),
                        std::move(summary), opts.timestamp, start);
}

// ---------------------------------------------------------------------------
// conditions: implication sweeps over the exhaustive connected corpus. Each
// check pairs a premise with a conclusion decided by the exact solvers; a
// violation is a premise-holding graph whose conclusion fails.

struct ConditionProbe {
    // premise held? plus violation detail when the conclusion fails
    bool premise = false;
    std::optional<ordered_json> violation;
};

template <typename Fn>
void run_condition(const char* id, int lo, int hi, const char* module, int jobs, Fn&& probe,
                   ordered_json& instances, ordered_json& counterexamples, long long& examined) {
    long long graphs = 0, held = 0, violations = 0;
    for (int n = lo; n <= hi; ++n) {
        const auto corpus = connected_graphs(n);
        std::vector<ConditionProbe> slots(corpus.size());
        parallel_for(static_cast<int>(corpus.size()), jobs,
                     [&](int i) { slots[i] = probe(corpus[i]); });
        graphs += static_cast<long long>(corpus.size());
        for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
            if (!slots[i].premise) continue;
            ++held;
            if (!slots[i].violation) continue;
            ++violations;
            ordered_json c;
            c["check"] = id;
            c["graph6"] = emit_graph6(corpus[i]);
            c["n"] = n;
            for (auto& [key, value] : slots[i].violation->items()) c[key] = value;
            c["module"] = module;
            counterexamples.push_back(std::move(c));
        }
    }
    examined += graphs;
    ordered_json inst;
    inst["check"] = id;
    inst["orders"] = ordered_json::array({lo, hi});
    inst["graphs"] = graphs;
    inst["premise_held"] = held;
    inst["violations"] = violations;
    instances.push_back(std::move(inst));
}

SuiteResult suite_conditions(const SuiteOptions& opts, Clock::time_point start) {
    ordered_json report = base_report("suite");
    report["suite"] = "conditions";
    const int max_n = default_or(opts.max_n, 8);
    require_range(max_n, 3, 8, "--max-n");
    const int jobs = std::max(1, opts.jobs);
    ordered_json options;
    options["max_n"] = max_n;
    options["jobs"] = jobs;
    report["options"] = std::move(options);
    const int cap7 = std::min(max_n, 7);

    ordered_json instances = ordered_json::array();
    ordered_json counterexamples = ordered_json::array();
    long long examined = 0;
    const auto hc_detail = [](const HCCertificate& cert) {
        ordered_json d;
        d["bad_pair"] = pair_json(cert.bad_pair);
        return d;
    };

    run_condition(
        "degree-condition-cycle", 4, cap7, "hamiltonian", jobs,
        [](const Graph& g) {
            ConditionProbe p;
            p.premise = chvatal_hamiltonian_condition(DegreeSequence::from_graph(g));
            if (p.premise && !hamiltonian_cycle(g)) p.violation = ordered_json::object();
            return p;
        },
        instances, counterexamples, examined);

    run_condition(
        "degree-condition-path", 2, cap7, "hamiltonian", jobs,
        [](const Graph& g) {
            ConditionProbe p;
            p.premise = path_condition(DegreeSequence::from_graph(g));
            if (p.premise && !has_hamiltonian_path(g)) p.violation = ordered_json::object();
            return p;
        },
        instances, counterexamples, examined);

    run_condition(
        "ore-hamiltonian-connected", 3, cap7, "hamiltonian", jobs,
        [&](const Graph& g) {
            ConditionProbe p;
            p.premise = ore_hc_condition(g);
            if (!p.premise) return p;
            const auto cert = is_hamiltonian_connected(g);
            if (cert.outcome != HCCertificate::Outcome::connected) p.violation = hc_detail(cert);
            return p;
        },
        instances, counterexamples, examined);

    run_condition(
        "closure-equivalence", 3, cap7, "hamiltonian", jobs,
        [](const Graph& g) {
            ConditionProbe p;
            p.premise = true;
            const bool before = hamiltonian_cycle(g).has_value();
            const bool after = hamiltonian_cycle(closure(g)).has_value();
            if (before != after) {
                ordered_json d;
                d["graph_hamiltonian"] = before;
                d["closure_hamiltonian"] = after;
                p.violation = std::move(d);
            }
            return p;
        },
        instances, counterexamples, examined);

    run_condition(
        "deletion-chromatic-drop", 2, cap7, "coloring", jobs,
        [](const Graph& g) {
            ConditionProbe p;
            p.premise = g.size() > 0;
            if (!p.premise) return p;
            const auto crit = criticality_report(g);
            for (int v = 0; v < g.order(); ++v)
                if (crit.per_vertex[v] != crit.chi && crit.per_vertex[v] != crit.chi - 1) {
                    ordered_json d;
                    d["vertex"] = v;
                    d["chi"] = crit.chi;
                    d["chi_after"] = crit.per_vertex[v];
                    p.violation = std::move(d);
                    return p;
                }
            for (const auto& [u, v, chi] : crit.per_edge)
                if (chi != crit.chi && chi != crit.chi - 1) {
                    ordered_json d;
                    d["edge"] = ordered_json::array({u, v});
                    d["chi"] = crit.chi;
                    d["chi_after"] = chi;
                    p.violation = std::move(d);
                    return p;
                }
            return p;
        },
        instances, counterexamples, examined);

    run_condition(
        "two-connected-square", 3, max_n, "hamiltonian", jobs,
        [&](const Graph& g) {
            ConditionProbe p;
            p.premise = connectivity(g).two_connected;
            if (!p.premise) return p;
            const auto cert = is_hamiltonian_connected(power(g, 2));
            if (cert.outcome != HCCertificate::Outcome::connected) p.violation = hc_detail(cert);
            return p;
        },
        instances, counterexamples, examined);

    run_condition(
        "cube-hamiltonian-connected", 3, max_n, "hamiltonian", jobs,
        [&](const Graph& g) {
            ConditionProbe p;
            p.premise = true;
            const auto cert = is_hamiltonian_connected(power(g, 3));
            if (cert.outcome != HCCertificate::Outcome::connected) p.violation = hc_detail(cert);
            return p;
        },
        instances, counterexamples, examined);

    run_condition(
        "hc-min-degree", 4, cap7, "hamiltonian", jobs,
        [](const Graph& g) {
            ConditionProbe p;
            p.premise =
                is_hamiltonian_connected(g).outcome == HCCertificate::Outcome::connected;
            if (!p.premise) return p;
            int min_deg = g.order();
            for (int v = 0; v < g.order(); ++v) min_deg = std::min(min_deg, g.degree(v));
            if (min_deg < 3) {
                ordered_json d;
                d["min_degree"] = min_deg;
                p.violation = std::move(d);
            }
            return p;
        },
        instances, counterexamples, examined);

    run_condition(
        "hc-non-bipartite", 3, cap7, "hamiltonian", jobs,
        [](const Graph& g) {
            ConditionProbe p;
            p.premise =
                is_hamiltonian_connected(g).outcome == HCCertificate::Outcome::connected;
            if (p.premise && is_bipartite(g)) p.violation = ordered_json::object();
            return p;
        },
        instances, counterexamples, examined);

    ordered_json inputs;
    inputs["count"] = examined;
    inputs["source"] = "built-in enumeration";
    report["inputs"] = std::move(inputs);

    long long violations = 0;
    for (const auto& inst : instances) violations += inst["violations"].get<long long>();
    ordered_json summary;
    summary["max_n"] = max_n;
    summary["checks"] = static_cast<int>(instances.size());
    summary["graphs_examined"] = examined;
    summary["violations"] = violations;
    return finish_suite(std::move(report), std::move(instances), std::move(counterexamples),
                        std::move(summary), opts.timestamp, start);
}

// ---------------------------------------------------------------------------
// certify: per-graph claims over a graph6 stream.

const char* claim_module(const std::string& claim) {
    if (claim == "chromatic" || claim == "k-critical") return "coloring";
    if (claim == "self-complementary") return "graph-core";
    return "hamiltonian";
}

struct CertifyOutcome {
    ordered_json entry;
    std::optional<ordered_json> counterexample;
    bool error = false;
};

CertifyOutcome certify_graph(const std::string& claim, int u, int v, const Graph& g, int idx) {
    CertifyOutcome out;
    ordered_json& entry = out.entry;
    const int n = g.order();
    const std::string g6 = emit_graph6(g);
    entry["index"] = idx;
    entry["graph6"] = g6;
    entry["n"] = n;
    bool pass = true;
    ordered_json detail = ordered_json::object();

    if (claim == "hamiltonian") {
        if (n < 3) {
            pass = false;
            entry["cycle"] = nullptr;
            entry["reason"] = "order below 3";
            detail["reason"] = "order below 3";
        } else if (const auto cycle = hamiltonian_cycle(g)) {
            entry["cycle"] = *cycle;
        } else {
            pass = false;
            entry["cycle"] = nullptr;
            entry["reason"] = "no hamiltonian cycle";
            detail["reason"] = "no hamiltonian cycle";
        }
    } else if (claim == "hamiltonian-path") {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw InputError("endpoints out of range for order " + std::to_string(n));
        entry["endpoints"] = ordered_json::array({u, v});
        if (const auto path = hamiltonian_path_between(g, u, v)) {
            entry["path"] = *path;
        } else {
            pass = false;
            entry["path"] = nullptr;
            detail["pair"] = ordered_json::array({u, v});
        }
    } else if (claim == "hamiltonian-connected") {
        const auto cert = is_hamiltonian_connected(g);
        entry["pairs"] = n < 2 ? 0 : n * (n - 1) / 2;
        if (cert.outcome == HCCertificate::Outcome::connected) {
            entry["witnesses"] = witness_list(cert);
        } else {
            pass = false;
            entry["witnesses"] = nullptr;
            entry["bad_pair"] = pair_json(cert.bad_pair);
            detail["bad_pair"] = pair_json(cert.bad_pair);
        }
    } else if (claim == "chromatic") {
        const auto cert = chromatic_number(g);
        entry["chi"] = cert.k;
        entry["coloring"] = cert.colors;
    } else if (claim == "k-critical") {
        const auto crit = criticality_report(g);
        entry["chi"] = crit.chi;
        entry["per_vertex"] = crit.per_vertex;
        ordered_json edges = ordered_json::array();
        for (const auto& [a, b, chi] : crit.per_edge)
            edges.push_back(ordered_json::array({a, b, chi}));
        entry["per_edge"] = std::move(edges);
        entry["critical"] = crit.verdict;
        if (!crit.verdict) {
            pass = false;
            for (int w = 0; w < n && detail.empty(); ++w)
                if (crit.per_vertex[w] != crit.chi - 1) {
                    detail["vertex"] = w;
                    detail["chi_after"] = crit.per_vertex[w];
                }
            for (const auto& [a, b, chi] : crit.per_edge) {
                if (!detail.empty()) break;
                if (chi != crit.chi - 1) {
                    detail["edge"] = ordered_json::array({a, b});
                    detail["chi_after"] = chi;
                }
            }
        }
    } else {  // self-complementary
        if (const auto perm = find_isomorphism(g, complement(g))) {
            entry["permutation"] = *perm;
        } else {
            pass = false;
            entry["permutation"] = nullptr;
            entry["reason"] = "not isomorphic to its complement";
            detail["reason"] = "not isomorphic to its complement";
        }
    }

    entry["verdict"] = pass ? "pass" : "fail";
    if (!pass) {
        ordered_json c;
        c["index"] = idx;
        c["graph6"] = g6;
        c["claim"] = claim;
        for (auto& [key, value] : detail.items()) c[key] = value;
        c["module"] = claim_module(claim);
        out.counterexample = std::move(c);
    }
    return out;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    const auto start = Clock::now();
    try {
        if (name == "theorem5") return suite_theorem5(opts, start);
        if (name == "theorem9") return suite_theorem9(opts, start);
        if (name == "theorem11") return suite_theorem11(opts, start);
        if (name == "prop7") return suite_prop7(opts, start);
        if (name == "conditions") return suite_conditions(opts, start);
        throw InputError("unknown suite: " + name);
    } catch (const std::exception& e) {
        ordered_json report = base_report("suite");
        report["suite"] = name;
        report["error"] = e.what();
        report["verdict"] = "error";
        stamp(report, opts.timestamp, start);
        return SuiteResult{std::move(report), 2};
    }
}

SuiteResult run_certify(const std::string& claim, const std::vector<std::string>& claim_args,
                        std::istream& input, const std::string& source,
                        const SuiteOptions& opts) {
    const auto start = Clock::now();
    ordered_json report = base_report("certify");
    report["claim"] = claim;
    auto usage_error = [&](const std::string& msg) {
        report["error"] = msg;
        report["verdict"] = "error";
        stamp(report, opts.timestamp, start);
        return SuiteResult{std::move(report), 2};
    };

    static const std::vector<std::string> known{
        "hamiltonian",         "hamiltonian-path", "hamiltonian-connected",
        "chromatic",           "k-critical",       "self-complementary"};
    if (std::find(known.begin(), known.end(), claim) == known.end())
        return usage_error("unknown claim: " + claim);

    int u = -1, v = -1;
    if (claim == "hamiltonian-path") {
        if (claim_args.size() != 2) return usage_error("hamiltonian-path needs two endpoints");
        try {
            std::size_t used = 0;
            u = std::stoi(claim_args[0], &used);
            if (used != claim_args[0].size()) throw std::invalid_argument("trailing text");
            v = std::stoi(claim_args[1], &used);
            if (used != claim_args[1].size()) throw std::invalid_argument("trailing text");
        } catch (const std::exception&) {
            return usage_error("hamiltonian-path endpoints must be integers");
        }
        if (u < 0 || v < 0) return usage_error("hamiltonian-path endpoints must be non-negative");
    } else if (!claim_args.empty()) {
        return usage_error("claim takes no arguments");
    }

    ordered_json claim_args_json = ordered_json::array();
    for (const auto& a : claim_args) claim_args_json.push_back(a);
    report["claim_args"] = std::move(claim_args_json);

    ordered_json results = ordered_json::array();
    ordered_json counterexamples = ordered_json::array();
    int passes = 0, fails = 0, errors = 0;
    int idx = 0;
    std::string line;
    while (std::getline(input, line)) {
        const std::string t = trimmed(line);
        if (t.empty()) continue;
        const int my_idx = idx++;
        try {
            const Graph g = parse_graph6(t);
            auto out = certify_graph(claim, u, v, g, my_idx);
            if (out.entry["verdict"] == "pass")
                ++passes;
            else
                ++fails;
            results.push_back(std::move(out.entry));
            if (out.counterexample) counterexamples.push_back(std::move(*out.counterexample));
        } catch (const std::exception& e) {
            ++errors;
            ordered_json entry;
            entry["index"] = my_idx;
            entry["input"] = t;
            entry["error"] = e.what();
            entry["verdict"] = "error";
            results.push_back(std::move(entry));
        }
    }

    ordered_json inputs;
    inputs["count"] = idx;
    inputs["source"] = source;
    report["inputs"] = std::move(inputs);
    report["results"] = std::move(results);
    report["counterexamples"] = std::move(counterexamples);
    ordered_json summary;
    summary["count"] = idx;
    summary["pass"] = passes;
    summary["fail"] = fails;
    summary["error"] = errors;
    report["summary"] = std::move(summary);
    report["verdict"] = errors ? "error" : (fails ? "fail" : "pass");
    stamp(report, opts.timestamp, start);
    return SuiteResult{std::move(report), errors ? 2 : (fails ? 1 : 0)};
}

}  // namespace hamlab
