// Python bindings for the core operations. Graphs cross the boundary as
// MultiGraph objects; cycles and edge sets as lists of edge ids.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcep/cycles.hpp"
#include "lcep/errors.hpp"
#include "lcep/generators.hpp"
#include "lcep/graph.hpp"
#include "lcep/separation.hpp"
#include "lcep/solver.hpp"
#include "lcep/suns.hpp"

namespace py = pybind11;
using namespace lcep;

namespace {

DetectorBudget budget_of(std::uint64_t nodes, std::int64_t ms) { return DetectorBudget{nodes, ms}; }

std::vector<std::pair<int, int>> edge_pairs(const MultiGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (EdgeId e : g.edge_ids()) out.emplace_back(g.endpoints(e).u, g.endpoints(e).v);
  return out;
}

std::optional<std::vector<EdgeId>> edges_of(const std::optional<Cycle>& c) {
  if (!c) return std::nullopt;
  return c->edges;
}

}  // namespace

PYBIND11_MODULE(_lcep, m) {
  m.doc() = "Edge-disjoint long-cycle packings and hitting sets";

  // InputError derives from ValueError so callers can catch it generically.
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ClaimViolation>(m, "ClaimViolation", PyExc_AssertionError);

  py::class_<MultiGraph>(m, "MultiGraph")
      .def(py::init<int>(), py::arg("n"))
      .def("add_edge", &MultiGraph::add_edge, py::arg("u"), py::arg("v"),
           "Append an edge and return its id.")
      .def_property_readonly("n", &MultiGraph::vertex_count)
      .def_property_readonly("m", &MultiGraph::edge_count)
      .def("edges", &edge_pairs, "Endpoint pairs in edge-id order.")
      .def("degree", &MultiGraph::degree, py::arg("v"))
      .def("to_text", [](const MultiGraph& g) { return write_graph(g); })
      .def_static("from_text", &parse_graph, py::arg("text"))
      .def_static("from_file", &read_graph_file, py::arg("path"))
      .def("__repr__", [](const MultiGraph& g) {
        return "MultiGraph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<SolveStats>(m, "SolveStats")
      .def_readonly("ds", &SolveStats::ds)
      .def_readonly("hubs", &SolveStats::hubs)
      .def_readonly("recursion_depth", &SolveStats::recursion_depth);

  py::class_<Certificate>(m, "Certificate")
      .def_property_readonly("type",
                             [](const Certificate& c) {
                               return c.is_packing() ? "packing" : "hitting_set";
                             })
      .def_property_readonly("is_packing", &Certificate::is_packing)
      .def_readonly("k", &Certificate::k)
      .def_readonly("ell", &Certificate::ell)
      .def_readonly("f_bound", &Certificate::bound)
      .def_readonly("cycles", &Certificate::cycles)
      .def_readonly("edges", &Certificate::edges)
      .def_readonly("stats", &Certificate::stats)
      .def("to_json", &certificate_to_json)
      .def_static("from_json", [](const std::string& text) { return certificate_from_json(text); });

  m.def("f_bound", &f_bound, py::arg("k"), py::arg("ell"));

  m.def(
      "solve",
      [](const MultiGraph& g, int k, int ell, std::uint64_t budget_nodes, std::int64_t budget_ms,
         std::optional<std::string> assert_level) {
        SolverConfig cfg;
        cfg.budget = budget_of(budget_nodes, budget_ms);
        if (assert_level) {
          if (*assert_level == "low") {
            cfg.assert_level = AssertLevel::low;
          } else if (*assert_level == "high") {
            cfg.assert_level = AssertLevel::high;
          } else {
            throw InputError("assert_level must be 'low' or 'high'");
          }
        }
        py::gil_scoped_release release;
        return solve(g, k, ell, cfg);
      },
      py::arg("graph"), py::arg("k"), py::arg("ell"), py::arg("budget_nodes") = 0,
      py::arg("budget_ms") = 0, py::arg("assert_level") = py::none(),
      "k edge-disjoint cycles of length >= ell, or at most f_bound(k, ell) edges hitting them all.");

  m.def(
      "verify",
      [](const MultiGraph& g, const Certificate& c) {
        const Verification v = verify_certificate(g, c);
        return std::make_pair(v.valid, v.diagnostics);
      },
      py::arg("graph"), py::arg("certificate"), "(valid, diagnostics)");

  m.def(
      "find_long_cycle",
      [](const MultiGraph& g, int ell, std::uint64_t budget_nodes) {
        return edges_of(find_long_cycle(g, LongCycleQuery::any_long(ell), budget_of(budget_nodes, 0)));
      },
      py::arg("graph"), py::arg("ell"), py::arg("budget_nodes") = 0);

  m.def("shortest_cycle", [](const MultiGraph& g) { return edges_of(shortest_cycle(g)); },
        py::arg("graph"));

  m.def(
      "pack_cycles_dense",
      [](const MultiGraph& g, int k) {
        std::vector<std::vector<EdgeId>> out;
        for (const Cycle& c : pack_cycles_dense(g, k)) out.push_back(c.edges);
        return out;
      },
      py::arg("graph"), py::arg("k"));

  m.def(
      "k_perfect_separation",
      [](const MultiGraph& g, const std::vector<VertexId>& a, int k) {
        return k_perfect_separation(g, a, k).ids();
      },
      py::arg("graph"), py::arg("a"), py::arg("k"));

  m.def(
      "oracle_max_packing",
      [](const MultiGraph& g, int ell) { return oracle_max_packing(g, ell).value; },
      py::arg("graph"), py::arg("ell"));
  m.def(
      "oracle_min_hitting",
      [](const MultiGraph& g, int ell) { return oracle_min_hitting(g, ell).value; },
      py::arg("graph"), py::arg("ell"));

  m.def("make_sun", &make_sun, py::arg("ell"));
  m.def("sun_order", &sun_order, py::arg("ell"));
  m.def(
      "sun_witness_after_deletion",
      [](int ell, const std::vector<EdgeId>& x) { return sun_witness_after_deletion(ell, x).edges; },
      py::arg("ell"), py::arg("x"));

  m.def(
      "random_connected_graph",
      [](int n, int m_edges, std::uint64_t seed) {
        Rng rng(seed);
        return random_connected_graph(rng, n, m_edges);
      },
      py::arg("n"), py::arg("m"), py::arg("seed") = 0);
}
