/*
 * gphpy - thin python bindings over the C++ core.
 *
 * Graphs cross the boundary as opaque objects plus the text format; numbers
 * that may outgrow machine words (cycle counts) cross as python ints.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "gph/equivalence.hpp"
#include "gph/fibration.hpp"
#include "gph/functors.hpp"
#include "gph/graph.hpp"
#include "gph/io.hpp"
#include "gph/walks.hpp"
#include "gph/zeta.hpp"

namespace py = pybind11;

namespace {

py::int_ to_pyint(const mpz_class& z) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

}  // namespace

PYBIND11_MODULE(gphpy, m) {
    m.doc() = "symbolic dynamics of finite directed multigraphs";

    py::class_<gph::Graph>(m, "Graph")
        .def_property_readonly("name", &gph::Graph::name)
        .def_property_readonly("nodes", &gph::Graph::nodes)
        .def_property_readonly("arcs",
                               [](const gph::Graph& g) {
                                   std::vector<std::tuple<std::string, std::string, std::string>> out;
                                   for (const auto& a : g.arcs()) out.emplace_back(a.id, a.src, a.tgt);
                                   return out;
                               })
        .def("node_count", &gph::Graph::node_count)
        .def("arc_count", &gph::Graph::arc_count)
        .def("__eq__", [](const gph::Graph& a, const gph::Graph& b) { return a == b; })
        .def("__repr__", [](const gph::Graph& g) {
            return "<Graph " + g.name() + ": " + std::to_string(g.node_count()) + " nodes, " +
                   std::to_string(g.arc_count()) + " arcs>";
        });

    m.def("parse_graph",
          [](const std::string& text) { return gph::parse_graph_text(text, "<python>"); },
          "parse the graph text format");
    m.def("serialize_graph", &gph::serialize_graph);
    m.def("to_dot", &gph::to_dot);
    m.def("standard_graph", &gph::standard_graph,
          "standard graphs by name: P(n), C(n), B(k), K(k), D, A, 1, 0");
    m.def("validate",
          [](const gph::Graph& g) { return gph::validate(g); },
          "all invariant violations, empty when the graph is well formed");

    m.def("arc_graph",
          [](const gph::Graph& g, unsigned n) { return gph::arc_graph_n(g, n); },
          py::arg("g"), py::arg("n") = 1);
    m.def("is_separated", &gph::is_separated);
    m.def("isomorphic", [](const gph::Graph& a, const gph::Graph& b) {
        return gph::graph_iso(a, b).has_value();
    });

    m.def("cycle_counts", [](const gph::Graph& g, unsigned degree) {
        py::list out;
        gph::ZetaData z = gph::zeta_data(g, degree);
        for (const auto& c : z.cycle_counts) out.append(to_pyint(c));
        return out;
    });
    m.def("char_poly", [](const gph::Graph& g) {
        return gph::poly_string(gph::char_poly(gph::adjacency(g)), "x", true);
    });
    m.def("zeta_det", [](const gph::Graph& g) {
        return gph::poly_string(gph::det_poly(gph::adjacency(g)), "u", false);
    });
    m.def("zeta_series", [](const gph::Graph& g, unsigned degree) {
        std::vector<std::pair<py::int_, py::int_>> out;
        gph::ZetaData z = gph::zeta_data(g, degree);
        for (const auto& q : z.series)
            out.emplace_back(to_pyint(q.get_num()), to_pyint(q.get_den()));
        return out;
    });
    m.def("zeta_equal", &gph::zeta_equal);

    m.def("walkable", [](const gph::Graph& g) { return gph::walkable_subgraph(g).graph; });
    m.def("is_walkable", &gph::is_walkable);
    m.def("tree_blocks", [](const gph::Graph& g) { return gph::tree_partition(g).blocks; });
    m.def("is_basal", &gph::is_basal);
    m.def("basal", [](const gph::Graph& g) {
        gph::Basing b = gph::basal_of(g);
        py::dict proj;
        for (const auto& v : g.nodes()) proj[py::str(v)] = b.p.node_image(v);
        return py::make_tuple(b.basal, proj);
    });

    m.def("compare", [](const gph::Graph& x, const gph::Graph& y, unsigned degree) {
        gph::EquivalenceReport r = gph::compare_battery(x, y, degree);
        py::dict d;
        d["zeta_equal"] = r.zeta_same;
        d["zeta_refuted_at"] = r.zeta_refuted_at;
        d["basal_isomorphic"] = r.basal_same;
        d["refuted"] = r.refuted();
        d["degree"] = r.degree;
        return d;
    }, py::arg("x"), py::arg("y"), py::arg("degree") = 8);

    m.def("walk_distance",
          [](const gph::Graph& g, const std::vector<std::string>& pre1,
             const std::vector<std::string>& per1, const std::vector<std::string>& pre2,
             const std::vector<std::string>& per2) {
              auto host = std::make_shared<const gph::Graph>(g);
              gph::EPWalk a(host, pre1, per1);
              gph::EPWalk b(host, pre2, per2);
              return gph::distance(a, b).str();
          },
          "exact dyadic distance of two eventually periodic walks, as a string");
}
