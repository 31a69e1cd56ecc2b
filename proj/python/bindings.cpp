#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hamlab/coloring.hpp"
#include "hamlab/constructions.hpp"
#include "hamlab/enumerate.hpp"
#include "hamlab/graph6.hpp"
#include "hamlab/hamiltonian.hpp"
#include "hamlab/mycielski_paths.hpp"
#include "hamlab/suites.hpp"
#include "hamlab/version.hpp"

namespace py = pybind11;
using namespace hamlab;

namespace {

py::dict hc_dict(const HCCertificate& cert) {
    py::dict d;
    d["connected"] = cert.outcome == HCCertificate::Outcome::connected;
    py::dict witnesses;
    for (const auto& [pr, path] : cert.witnesses)
        witnesses[py::make_tuple(pr.first, pr.second)] = path;
    d["witnesses"] = witnesses;
    d["bad_pair"] = py::make_tuple(cert.bad_pair.first, cert.bad_pair.second);
    return d;
}

py::dict criticality_dict(const CriticalityReport& rep) {
    py::dict d;
    d["chi"] = rep.chi;
    d["per_vertex"] = rep.per_vertex;
    d["per_edge"] = rep.per_edge;
    d["critical"] = rep.verdict;
    return d;
}

}  // namespace

PYBIND11_MODULE(_hamlab, m) {
    m.attr("__version__") = kVersion;

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def("order", &Graph::order)
        .def("size", &Graph::size)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(n=" << g.order() << ", m=" << g.size() << ")";
            return out.str();
        });

    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("emit_graph6", &emit_graph6, py::arg("g"));

    m.def("complement", &complement);
    m.def("power", &power, py::arg("g"), py::arg("k"));
    m.def("delete_vertex", &delete_vertex, py::arg("g"), py::arg("v"));
    m.def("is_connected", &is_connected);
    m.def("is_bipartite", &is_bipartite);
    m.def("has_triangle", &has_triangle);
    m.def("diameter", [](const Graph& g) { return distances(g).diameter; });
    m.def("cut_vertices", [](const Graph& g) { return connectivity(g).cut_vertices; });
    m.def("is_two_connected", [](const Graph& g) { return connectivity(g).two_connected; });
    m.def("degree_sequence", [](const Graph& g) { return DegreeSequence::from_graph(g).d; });
    m.def("find_isomorphism", &find_isomorphism, py::arg("g"), py::arg("h"));
    m.def("isomorphic", &isomorphic, py::arg("g"), py::arg("h"));
    m.def("is_self_complementary", [](const Graph& g) -> std::optional<std::vector<int>> {
        const auto cert = is_self_complementary(g);
        if (!cert) return std::nullopt;
        return cert->perm;
    });
    m.def(
        "verify_path",
        [](const Graph& g, const VertexPath& p, bool require_hamiltonian,
           std::optional<std::pair<int, int>> endpoints) {
            const auto v = verify_path(g, p, require_hamiltonian, endpoints);
            py::dict d;
            d["ok"] = v.ok;
            d["position"] = v.position;
            d["message"] = v.message;
            return d;
        },
        py::arg("g"), py::arg("path"), py::arg("require_hamiltonian") = false,
        py::arg("endpoints") = std::nullopt);

    m.def("mycielski", [](const Graph& g) { return mycielski(g).graph; });
    m.def("iterated_mycielski", &iterated_mycielski, py::arg("k"));
    m.def(
        "standard_graph",
        [](const std::string& kind, int n) { return standard_graph(kind, n); },
        py::arg("kind"), py::arg("n"));
    m.def("join_universal", &join_universal);

    m.def("hamiltonian_path_between", &hamiltonian_path_between, py::arg("g"), py::arg("u"),
          py::arg("v"));
    m.def("has_hamiltonian_path", &has_hamiltonian_path);
    m.def("hamiltonian_cycle", &hamiltonian_cycle);
    m.def("is_hamiltonian_connected", [](const Graph& g) { return hc_dict(is_hamiltonian_connected(g)); });
    m.def("closure", &closure);
    m.def("chvatal_hamiltonian_condition",
          [](const Graph& g) { return chvatal_hamiltonian_condition(DegreeSequence::from_graph(g)); });
    m.def("path_condition", [](const Graph& g) { return path_condition(DegreeSequence::from_graph(g)); });
    m.def("ore_hc_condition", &ore_hc_condition);

    m.def("k_colorable", &k_colorable, py::arg("g"), py::arg("k"));
    m.def("chromatic_number", [](const Graph& g) {
        const auto cert = chromatic_number(g);
        return py::make_tuple(cert.k, cert.colors);
    });
    m.def("criticality_report",
          [](const Graph& g) { return criticality_dict(criticality_report(g)); });
    m.def("check_mycielski_criticality", [](const Graph& g) {
        const auto check = check_mycielski_criticality(g);
        py::dict d;
        d["base"] = criticality_dict(check.base);
        d["lifted"] = criticality_dict(check.lifted);
        d["holds"] = check.holds;
        return d;
    });

    m.def("all_graphs", [](int n) { return all_graphs(n); });
    m.def("connected_graphs", &connected_graphs);
    m.def("self_complementary_graphs", &self_complementary_graphs);

    m.def("prop7_path", &prop7_path, py::arg("n"));
    m.def("find_parity_chord", &find_parity_chord, py::arg("g"), py::arg("base"));
    m.def("mycielski_hc_certificate", [](const Graph& g) {
        const auto rep = mycielski_hc_certificate(g);
        py::dict d;
        d["certificate"] = hc_dict(rep.certificate);
        d["method_tally"] = rep.method_tally;
        d["base_failure"] = rep.base_failure
                                ? py::object(py::make_tuple(rep.base_failure->first,
                                                            rep.base_failure->second))
                                : py::object(py::none());
        return d;
    });

    m.def("run_suite", [](const std::string& name, int max_n, int max_k, int only_n, int jobs,
                          bool timestamp, const std::string& corpus) {
        SuiteOptions opts;
        opts.max_n = max_n;
        opts.max_k = max_k;
        opts.only_n = only_n;
        opts.jobs = jobs;
        opts.timestamp = timestamp;
        opts.corpus = corpus;
        const auto result = run_suite(name, opts);
        return py::make_tuple(result.report.dump(2), result.exit_code);
    }, py::arg("name"), py::arg("max_n") = -1, py::arg("max_k") = -1, py::arg("only_n") = -1,
       py::arg("jobs") = 1, py::arg("timestamp") = false, py::arg("corpus") = "");
}
