#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sepmc/bounds.hpp"
#include "sepmc/generators.hpp"
#include "sepmc/graph.hpp"
#include "sepmc/io.hpp"
#include "sepmc/modular.hpp"
#include "sepmc/mwis.hpp"
#include "sepmc/pmc.hpp"
#include "sepmc/recognition.hpp"
#include "sepmc/separators.hpp"

namespace py = pybind11;
using namespace sepmc;

namespace {

std::vector<SeparatorRecord> minseps_by_algo(const Graph& g, const std::string& algo, int k) {
  const int keff = k >= 0 ? k : clique_number(g);
  if (algo == "brute") return enumerate_minseps_brute(g);
  if (algo == "p6free") return enumerate_minseps_p6free(g, keff);
  if (algo == "generic") return enumerate_minseps_generic(g);
  throw std::invalid_argument("algo must be brute, generic or p6free");
}

std::vector<VertexSet> separator_sets(const std::vector<SeparatorRecord>& recs) {
  std::vector<VertexSet> out;
  out.reserve(recs.size());
  for (const auto& r : recs) out.push_back(r.separator);
  return out;
}

py::dict report_to_dict(const BoundsReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["k"] = r.k;
  d["a"] = r.a;
  d["b"] = r.b;
  d["strong_module_count"] = r.strong_module_count;
  d["connected_module_count"] = r.connected_module_count;
  d["is_p6_free"] = r.is_p6_free;
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict e;
    e["name"] = c.name;
    e["lhs"] = c.lhs.str();
    e["rhs"] = c.rhs.str();
    e["pass"] = c.pass;
    checks.append(e);
  }
  d["checks"] = checks;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimal separators, potential maximal cliques and MWIS for P6-free graphs";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("generate", [](const std::string& spec) { return make_graph(parse_gen_spec(spec)); },
        py::arg("family"), "Build a generator-family graph from a descriptor like 'prism:3'");
  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("to_edge_list", &to_edge_list, py::arg("g"));
  m.def("parse_graph6", &parse_graph6, py::arg("text"));
  m.def("to_graph6", &to_graph6, py::arg("g"));

  m.def("clique_number", &clique_number, py::arg("g"));
  m.def("is_pt_free", &is_pt_free, py::arg("g"), py::arg("t"));
  m.def("find_induced_path", &find_induced_path, py::arg("g"), py::arg("t"));

  m.def("is_module", &is_module, py::arg("g"), py::arg("members"));
  m.def("strong_modules", &strong_modules, py::arg("g"));
  m.def("maximal_proper_strong_modules", &maximal_proper_strong_modules, py::arg("g"));
  m.def("connected_modules", &connected_modules, py::arg("g"), py::arg("k"));

  m.def("is_minimal_separator", &is_minimal_separator, py::arg("g"), py::arg("x"));
  m.def("full_components", &full_components, py::arg("g"), py::arg("x"));
  m.def(
      "minimal_separators",
      [](const Graph& g, const std::string& algo, int k) {
        return separator_sets(minseps_by_algo(g, algo, k));
      },
      py::arg("g"), py::arg("algo") = "generic", py::arg("k") = -1);

  m.def("is_pmc", &is_pmc, py::arg("g"), py::arg("s"));
  m.def(
      "potential_maximal_cliques",
      [](const Graph& g, const std::string& algo, int k) {
        std::vector<VertexSet> out;
        if (algo == "brute") {
          for (const auto& r : enumerate_pmcs_brute(g)) out.push_back(r.members);
        } else {
          for (const auto& r : enumerate_pmcs_from_minseps(g, minseps_by_algo(g, algo, k)))
            out.push_back(r.members);
        }
        return out;
      },
      py::arg("g"), py::arg("algo") = "generic", py::arg("k") = -1);

  m.def(
      "verify_bounds", [](const Graph& g) { return report_to_dict(verify_bounds(g)); },
      py::arg("g"));

  m.def(
      "mwis",
      [](const Graph& g, const std::vector<long long>& weights, const std::string& algo, int k) {
        WeightedGraph wg{g, weights};
        MwisResult res;
        if (algo == "brute") {
          res = mwis_brute(wg);
        } else {
          auto minseps = minseps_by_algo(g, algo, k);
          res = mwis_pmc(wg, enumerate_pmcs_from_minseps(g, minseps), minseps);
        }
        return py::make_tuple(res.weight, res.members);
      },
      py::arg("g"), py::arg("weights"), py::arg("algo") = "generic", py::arg("k") = -1);
}
