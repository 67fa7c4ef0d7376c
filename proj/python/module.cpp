// Python bindings for the core analyses: graph construction, exact edge
// betweenness, uniformity, transitivity and distance-regularity predicates,
// and the structural EBU certificates. Rational values cross the boundary as
// "p/q" strings so nothing is ever rounded.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ebu/canonical.hpp"
#include "ebu/centrality.hpp"
#include "ebu/circulant_iso.hpp"
#include "ebu/class_graphs.hpp"
#include "ebu/families.hpp"
#include "ebu/graph6.hpp"
#include "ebu/scan.hpp"
#include "ebu/transitivity.hpp"

namespace py = pybind11;

namespace {

ebu::Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return ebu::Graph::from_edges(n, edges);
}

py::dict report_to_dict(const ebu::EdgeCentralityReport& report) {
    py::dict values;
    for (const auto& [edge, value] : report.values)
        values[py::make_tuple(edge.u, edge.v)] = value.str();
    py::list distinct;
    for (const auto& [value, count] : report.distinct_values)
        distinct.append(py::make_tuple(value.str(), count));
    py::dict out;
    out["hash"] = report.graph_hash;
    out["values"] = values;
    out["distinct_values"] = distinct;
    out["uniform"] = report.is_uniform;
    out["uniform_value"] =
        report.uniform_value ? py::object(py::str(report.uniform_value->str())) : py::none();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact edge betweenness centrality and uniformity analysis";

    py::class_<ebu::Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("vertex_count"))
        .def_static("from_edges", &graph_from_edges, py::arg("vertex_count"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return ebu::parse_graph6(s); })
        .def_property_readonly("vertex_count", &ebu::Graph::vertex_count)
        .def_property_readonly("edge_count", &ebu::Graph::edge_count)
        .def("neighbors", [](const ebu::Graph& g, int v) { return g.neighbors(v); })
        .def("has_edge", &ebu::Graph::has_edge)
        .def("edges",
             [](const ebu::Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("complement", &ebu::Graph::complement)
        .def("graph6", [](const ebu::Graph& g) { return ebu::write_graph6(g); })
        .def("__eq__", [](const ebu::Graph& a, const ebu::Graph& b) { return a == b; })
        .def("__repr__", [](const ebu::Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("circulant", [](int k, const std::vector<int>& chords) {
        return ebu::circulant(ebu::CirculantSpec(k, chords));
    });
    m.def("family", [](const std::string& kind, const std::vector<int>& params) {
        return ebu::family(ebu::parse_family_kind(kind), params);
    });

    m.def("edge_betweenness",
          [](const ebu::Graph& g) { return report_to_dict(ebu::edge_betweenness(g)); });
    m.def("is_edge_betweenness_uniform", [](const ebu::Graph& g) {
        ebu::UniformityResult r = ebu::is_edge_betweenness_uniform(g);
        return py::make_tuple(r.uniform,
                              r.value ? py::object(py::str(r.value->str())) : py::none());
    });
    m.def("closed_form_diameter2", [](const ebu::Graph& g, int u, int v) {
        return ebu::closed_form_diameter2(g, ebu::EdgeId(u, v)).str();
    });

    m.def("is_connected", &ebu::is_connected);
    m.def("diameter", [](const ebu::Graph& g) {
        ebu::DiameterResult d = ebu::diameter(g);
        return py::make_tuple(d.diameter, d.connected);
    });
    m.def("is_vertex_transitive", &ebu::is_vertex_transitive);
    m.def("is_edge_transitive", [](const ebu::Graph& g) {
        return g.edge_count() == 0 ? true : ebu::is_edge_transitive(g);
    });
    m.def("is_distance_regular", [](const ebu::Graph& g) { return ebu::is_distance_regular(g); });
    m.def("are_isomorphic", &ebu::are_isomorphic);
    m.def("canonical_graph6",
          [](const ebu::Graph& g) { return ebu::canonical_form(g).canonical_bytes; });

    m.def("circulant_isomorphic", [](int k, std::pair<int, int> p, std::pair<int, int> q) {
        return ebu::circulant_isomorphic(k, p, q);
    });
    m.def("tetravalent_circulant_edge_transitive", &ebu::tetravalent_circulant_edge_transitive);
    m.def("circulant_distance_regular", [](int k, const std::vector<int>& chords) {
        return ebu::circulant_distance_regular(ebu::CirculantSpec(k, chords));
    });

    m.def("ebu_certificate", [](int cls, int n) {
        return ebu::certificate_to_json(ebu::ebu_certificate(ebu::ClassId(cls, n)));
    });
    m.def("conjecture_circulant", [](int cls, int n) {
        ebu::ConjectureClassSpec s = ebu::conjecture_class(cls, n);
        return py::make_tuple(s.spec.order, s.spec.chords);
    });
}
