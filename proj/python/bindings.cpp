#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "expdom/bounds.hpp"
#include "expdom/constructions.hpp"
#include "expdom/error.hpp"
#include "expdom/exact_solver.hpp"
#include "expdom/gadget.hpp"
#include "expdom/graph_io.hpp"
#include "expdom/heuristics.hpp"
#include "expdom/json_io.hpp"
#include "expdom/named_graphs.hpp"
#include "expdom/reductions.hpp"
#include "expdom/tree_solver.hpp"
#include "expdom/weights.hpp"

namespace py = pybind11;
using namespace expdom;

namespace {

// Results cross the boundary as JSON text; the Python side decodes them.
std::string dump(const Json& j) { return j.dump(); }

WeightMode mode_of(bool porous) { return porous ? WeightMode::Porous : WeightMode::Blocked; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exponential domination in subcubic graphs";

  static py::exception<Error> domain_error(m, "DomainError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string text = std::string(error_kind_name(e.kind())) + ": " + e.what();
      PyErr_SetString(domain_error.ptr(), text.c_str());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, Vertex v) {
        const auto span = g.neighbors(v);
        return std::vector<Vertex>(span.begin(), span.end());
      })
      .def("is_subcubic", &Graph::is_subcubic)
      .def("is_tree", [](const Graph& g) { return is_tree(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("parse_edge", [](const std::string& text) { return parse_graph(text, GraphFormat::Edge); });
  m.def("parse_graph6", [](const std::string& text) { return parse_graph(text, GraphFormat::Graph6); });
  m.def("emit_edge", [](const Graph& g) { return emit_graph(g, GraphFormat::Edge); });
  m.def("emit_graph6", [](const Graph& g) { return emit_graph(g, GraphFormat::Graph6); });
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("star_graph", &star_graph);
  m.def("named_graph", &named_graph);

  m.def("_weights", [](const Graph& g, const std::vector<Vertex>& set, bool porous) {
    return dump(to_json(weight_profile(g, make_vertex_set(set), mode_of(porous))));
  });
  m.def("is_exponential_dominating", [](const Graph& g, const std::vector<Vertex>& set, bool porous) {
    return is_exponential_dominating(g, make_vertex_set(set), mode_of(porous)).ok;
  }, py::arg("g"), py::arg("set"), py::arg("porous") = false);

  m.def("_gamma_e_exact", [](const Graph& g, bool porous, std::optional<std::size_t> max_k, bool force) {
    py::gil_scoped_release release;
    return dump(to_json(gamma_e_exact(g, {mode_of(porous), max_k, force})));
  });
  m.def("_gamma_e_tree", [](const Graph& g) { return dump(to_json(gamma_e_tree(g).result)); });
  m.def("_min_triple_weight_set", [](const Graph& g) { return dump(to_json(min_triple_weight_set(g))); });

  m.def("_reduce", [](const Graph& g, const std::vector<std::string>& rules) {
    std::set<ReductionRule> chosen;
    for (const auto& r : rules) chosen.insert(parse_rule(r));
    return dump(to_json(reduce_fully(g, chosen)));
  });

  m.def("build_figure2", &build_figure2);
  m.def("build_t_tree", [](const std::vector<std::size_t>& degrees) { return build_t_tree(degrees).graph(); });
  m.def("build_degree5_instance", [](std::size_t h) {
    auto inst = build_degree5_instance(h);
    return py::make_tuple(inst.tree.graph(), inst.set, inst.depth);
  });
  m.def("generate_extremal_candidates", &generate_extremal_candidates);
  m.def("build_theorem7_extremal", [](const Graph& t0) {
    auto inst = build_theorem7_extremal(t0);
    return py::make_tuple(inst.graph, inst.triple_set);
  });
  m.def("build_gadget", [](const Graph& g) { return build_gadget(g).gadget; });
  m.def("gadget_cover_roundtrip", [](const Graph& g, const std::vector<Vertex>& cover) {
    const auto map = build_gadget(g);
    const auto s = cover_to_expdom(map, make_vertex_set(cover));
    return py::make_tuple(s, expdom_to_cover(map, s).cover);
  });

  m.def("_heuristic", [](const Graph& g, double p, std::uint64_t seed, std::size_t trials, std::size_t threads) {
    py::gil_scoped_release release;
    return dump(to_json(randomized_expdom(g, p, seed, trials, threads)));
  });
  m.def("theorem6_params", [](const std::string& mode, double value, std::optional<std::size_t> n) {
    const auto params = theorem6_params(mode == "alpha" ? ParamMode::Alpha : ParamMode::Epsilon, value, n);
    return py::make_tuple(params.p, params.d, params.required_girth);
  }, py::arg("mode"), py::arg("value"), py::arg("n") = std::nullopt);

  m.def("_bounds_report", [](const Graph& g, std::size_t lo, std::size_t hi, std::optional<std::size_t> triple) {
    return dump(to_json(bounds_report(g, GammaValue{lo, hi}, triple)));
  });
}
