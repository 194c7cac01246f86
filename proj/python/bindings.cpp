#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cageforge/amalgam.hpp"
#include "cageforge/certify.hpp"
#include "cageforge/error.hpp"
#include "cageforge/families.hpp"
#include "cageforge/io_formats.hpp"
#include "cageforge/reductions.hpp"
#include "cageforge/semiplane.hpp"

namespace py = pybind11;
using namespace cageforge;

namespace {

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

Graph graph_from_pairs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

}  // namespace

PYBIND11_MODULE(_cageforge, m) {
  m.doc() = "Girth-5 regular graphs from elliptic semiplane Levi graphs";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<PlanError> plan_error(m, "PlanError", PyExc_RuntimeError);
  static py::exception<UnsupportedQError> unsupported(m, "UnsupportedQError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      const std::string msg = std::string(e.what()) + " (offset " + std::to_string(e.offset()) + ")";
      PyErr_SetString(parse_error.ptr(), msg.c_str());
    } catch (const PlanError& e) {
      PyErr_SetString(plan_error.ptr(), e.what());
    } catch (const UnsupportedQError& e) {
      PyErr_SetString(unsupported.ptr(), e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_pairs), py::arg("n"), py::arg("edges"))
      .def("order", &Graph::order)
      .def("size", &Graph::size)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             if (v >= g.order()) throw py::index_error("vertex out of range");
             auto nb = g.neighbors(v);
             return std::vector<Vertex>(nb.begin(), nb.end());
           })
      .def("has_edge", &Graph::has_edge)
      .def("edges", &edge_pairs)
      .def("degree_profile", [](const Graph& g) { return degree_profile(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("girth", &girth, py::arg("graph"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>(),
        "Exact girth, or None for a forest.");
  m.def("enumerate_short_cycles", &enumerate_short_cycles, py::arg("graph"), py::arg("max_len"));
  m.def("is_prime", &is_prime);

  py::class_<LeviGraph>(m, "LeviGraph")
      .def_property_readonly("q", &LeviGraph::q)
      .def_property_readonly("graph", &LeviGraph::graph)
      .def("tag", [](const LeviGraph& b, Vertex v) { return to_string(b.tag(v)); })
      .def("self_check", &LeviGraph::self_check);
  m.def(
      "build_levi",
      [](std::uint32_t q, std::uint32_t max_q, bool check_girth) {
        return build_levi(q, {.max_q = max_q, .verify = true, .check_girth = check_girth});
      },
      py::arg("q"), py::arg("max_q") = kDefaultMaxQ, py::arg("check_girth") = true);
  m.def("translation_check", &translation_check);

  py::class_<ReductionSpec>(m, "ReductionSpec")
      .def(py::init([](LabelSet S, LabelSet T, std::uint32_t u) { return ReductionSpec{S, T, u}; }),
           py::arg("S") = LabelSet{}, py::arg("T") = LabelSet{}, py::arg("u") = 0)
      .def_readwrite("S", &ReductionSpec::S)
      .def_readwrite("T", &ReductionSpec::T)
      .def_readwrite("u", &ReductionSpec::u);

  py::class_<ReducedGraph>(m, "ReducedGraph")
      .def_property_readonly("q", &ReducedGraph::q)
      .def_property_readonly("graph", &ReducedGraph::graph)
      .def_property_readonly("spec", &ReducedGraph::spec)
      .def("tag", [](const ReducedGraph& r, Vertex v) { return to_string(r.tag(v)); });
  m.def("reduce", &reduce, py::arg("base"), py::arg("spec"));

  py::class_<AmalgamPlan>(m, "AmalgamPlan")
      .def_readonly("q", &AmalgamPlan::q)
      .def_readonly("k", &AmalgamPlan::k)
      .def_readonly("spec", &AmalgamPlan::spec)
      .def_property_readonly("degree", &AmalgamPlan::degree)
      .def_property_readonly("order", &AmalgamPlan::order)
      .def("check", [](const AmalgamPlan& p) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& c : check_plan(p).checks) out.emplace_back(c.name, c.passed, c.detail);
        return out;
      });
  m.def("plan_for", &plan_for, py::arg("q"), py::arg("u") = 0, py::arg("max_q") = kDefaultMaxQ);
  m.def(
      "amalgamate",
      [](const ReducedGraph& r, const AmalgamPlan& p, bool verify_girth) {
        return amalgamate(r, p, {.verify_girth = verify_girth});
      },
      py::arg("reduced"), py::arg("plan"), py::arg("verify_girth") = true,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "weights",
      [](std::uint32_t q) {
        const PieceSet p = pieces_for(q);
        return std::make_pair(weight_union(weight_set(p.h1), weight_set(p.g1)).classes,
                              weight_union(weight_set(p.h2), weight_set(p.g2)).classes);
      },
      py::arg("q"), "(P_ω, L_ω) weight classes of the pieces used for q.");

  m.def("moore_bound", &moore_bound, py::arg("k"), py::arg("g"));
  m.def(
      "certify_json",
      [](const Graph& g, std::optional<std::size_t> degree, std::optional<std::uint32_t> girth_claim,
         std::optional<std::size_t> order) {
        return certificate_json(certify(g, {degree, girth_claim, order}));
      },
      py::arg("graph"), py::arg("degree") = py::none(), py::arg("girth") = py::none(),
      py::arg("order") = py::none(), py::call_guard<py::gil_scoped_release>());

  m.def("to_graph6", [](const Graph& g, bool header) { return py::bytes(to_graph6(g, header)); },
        py::arg("graph"), py::arg("header") = false);
  m.def("from_graph6", [](const py::bytes& b) { return from_graph6(std::string(b)); });
  m.def("write_edge_list", &write_edge_list, py::arg("graph"), py::arg("meta") = EdgeListMeta{});
  m.def("read_edge_list", [](const std::string& text) {
    EdgeListDocument doc = read_edge_list(text);
    return py::make_tuple(std::move(doc.graph), doc.meta, doc.warnings);
  });
}
