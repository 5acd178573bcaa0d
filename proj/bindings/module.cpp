#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "powerhg/audit.hpp"
#include "powerhg/canon.hpp"
#include "powerhg/enumerate.hpp"
#include "powerhg/expr.hpp"
#include "powerhg/graph6.hpp"

namespace py = pybind11;
using namespace powerhg;

namespace {

SolverLimits limits_from(std::uint64_t node_budget) {
  SolverLimits limits;
  limits.node_budget = node_budget;
  return limits;
}

const Catalog* catalog_ptr(const std::optional<Catalog>& catalog) {
  return catalog ? &*catalog : nullptr;
}

constexpr std::uint64_t kDefaultBudget = SolverLimits{}.node_budget;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact domination/matching/transversal engine for generalized power hypergraphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init<int, std::vector<Edge>>(), py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
      .def("degree", &Graph::degree, py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("neighbors", [](const Graph& g, int v) { return set_to_vertices(g.adjacency(v)); },
           py::arg("v"))
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(graph6=\"" + write_graph6(g) + "\")";
      });

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init([](int order, const std::vector<std::vector<int>>& edges) {
             std::vector<VertexSet> masks;
             masks.reserve(edges.size());
             for (const auto& e : edges) masks.push_back(vertices_to_set(e));
             return Hypergraph(order, std::move(masks));
           }),
           py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &Hypergraph::order)
      .def_property_readonly("size", &Hypergraph::size)
      .def_property_readonly("edges", [](const Hypergraph& h) {
        std::vector<std::vector<int>> out;
        for (VertexSet e : h.edges()) out.push_back(set_to_vertices(e));
        return out;
      })
      .def("__repr__", [](const Hypergraph& h) {
        return "Hypergraph(order=" + std::to_string(h.order()) + ", edges=" +
               std::to_string(h.size()) + ")";
      });

  m.def("validate", [](const Hypergraph& h, std::optional<int> k) { validate(h, k); },
        py::arg("hypergraph"), py::arg("k") = std::nullopt);
  m.def("vertex_degree", &vertex_degree, py::arg("hypergraph"), py::arg("v"));
  m.def("primal_graph", &primal_graph, py::arg("hypergraph"));
  m.def("write_hypergraph_text", &write_hypergraph_text, py::arg("hypergraph"), py::arg("k"));
  m.def("parse_hypergraph_text", [](const std::string& text) {
    int k = 0;
    Hypergraph h = parse_hypergraph_text(text, &k);
    return py::make_tuple(h, k);
  });

  m.def("parse_graph6", [](const std::string& line) { return parse_graph6(line); }, py::arg("line"));
  m.def("write_graph6", &write_graph6, py::arg("graph"));
  m.def("canonical_form", &canonical_form, py::arg("graph"));
  m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"));

  m.def("is_connected", &is_connected, py::arg("graph"));
  m.def("is_bipartite", [](const Graph& g) -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
    auto bip = is_bipartite(g);
    if (!bip) return std::nullopt;
    return std::make_pair(set_to_vertices(bip->side_x), set_to_vertices(bip->side_y));
  }, py::arg("graph"));
  m.def("min_degree", &min_degree, py::arg("graph"));
  m.def("end_vertices", [](const Graph& g) { return set_to_vertices(end_vertices(g)); });
  m.def("stems", [](const Graph& g) { return set_to_vertices(stems(g)); });

  m.def("cycle", &cycle, py::arg("p"));
  m.def("path", &path, py::arg("p"));
  m.def("complete", &complete, py::arg("n"));
  m.def("complete_bipartite", &complete_bipartite, py::arg("a"), py::arg("b"));
  m.def("wedge_cycles", &wedge_cycles, py::arg("p"), py::arg("q"));
  m.def("corona", &corona, py::arg("graph"));
  m.def("generalized_corona", &generalized_corona, py::arg("graph"), py::arg("pendants"));
  m.def("parse_construction", [](const std::string& text) { return parse_construction(text); },
        py::arg("expression"));

  py::class_<BlowupHypergraph>(m, "BlowupHypergraph")
      .def_readonly("hypergraph", &BlowupHypergraph::hypergraph)
      .def_readonly("base", &BlowupHypergraph::base)
      .def_readonly("k", &BlowupHypergraph::k)
      .def_readonly("s", &BlowupHypergraph::s)
      .def_property_readonly("vertex_blocks", [](const BlowupHypergraph& b) {
        std::vector<std::vector<int>> out;
        for (VertexSet v : b.vertex_blocks) out.push_back(set_to_vertices(v));
        return out;
      })
      .def_property_readonly("edge_blocks", [](const BlowupHypergraph& b) {
        std::vector<std::vector<int>> out;
        for (VertexSet v : b.edge_blocks) out.push_back(set_to_vertices(v));
        return out;
      });
  m.def("blow_up", &blow_up, py::arg("graph"), py::arg("k"), py::arg("s"));

  py::class_<InvariantCertificate>(m, "InvariantCertificate")
      .def_readonly("value", &InvariantCertificate::value)
      .def_readonly("witness", &InvariantCertificate::witness)
      .def("__repr__", [](const InvariantCertificate& c) {
        return "InvariantCertificate(value=" + std::to_string(c.value) + ")";
      });

  m.def("domination_number_graph",
        [](const Graph& g, std::uint64_t budget) {
          return domination_number_graph(g, limits_from(budget));
        },
        py::arg("graph"), py::arg("node_budget") = kDefaultBudget);
  m.def("matching_number_graph", &matching_number_graph, py::arg("graph"));
  m.def("transversal_number_graph",
        [](const Graph& g, std::uint64_t budget) {
          return transversal_number_graph(g, limits_from(budget));
        },
        py::arg("graph"), py::arg("node_budget") = kDefaultBudget);
  m.def("domination_number_hypergraph",
        [](const Hypergraph& h, std::uint64_t budget) {
          return domination_number_hypergraph(h, limits_from(budget));
        },
        py::arg("hypergraph"), py::arg("node_budget") = kDefaultBudget);
  m.def("matching_number_hypergraph",
        [](const Hypergraph& h, std::uint64_t budget) {
          return matching_number_hypergraph(h, limits_from(budget));
        },
        py::arg("hypergraph"), py::arg("node_budget") = kDefaultBudget);
  m.def("transversal_number_hypergraph",
        [](const Hypergraph& h, std::uint64_t budget) {
          return transversal_number_hypergraph(h, limits_from(budget));
        },
        py::arg("hypergraph"), py::arg("node_budget") = kDefaultBudget);

  m.def("oracle_domination", py::overload_cast<const Graph&>(&oracle_domination));
  m.def("oracle_domination", py::overload_cast<const Hypergraph&>(&oracle_domination));
  m.def("oracle_matching", py::overload_cast<const Graph&>(&oracle_matching));
  m.def("oracle_matching", py::overload_cast<const Hypergraph&>(&oracle_matching));
  m.def("oracle_transversal", py::overload_cast<const Graph&>(&oracle_transversal));
  m.def("oracle_transversal", py::overload_cast<const Hypergraph&>(&oracle_transversal));

  m.def("enumerate_connected_graphs",
        [](int order, const std::optional<GraphFilter>& filter) {
          return enumerate_connected_graphs(order, filter.value_or(GraphFilter{}));
        },
        py::arg("order"), py::arg("filter") = std::nullopt);

  py::class_<CatalogEntry>(m, "CatalogEntry")
      .def_readonly("label", &CatalogEntry::label)
      .def_readonly("graph", &CatalogEntry::graph)
      .def_readonly("graph6", &CatalogEntry::graph6);
  m.def("load_catalog_file", &load_catalog_file, py::arg("path"));

  py::class_<G1Result>(m, "G1Result")
      .def_readonly("member", &G1Result::member)
      .def_readonly("reasons", &G1Result::reasons);

  py::class_<FamilyVerdict>(m, "FamilyVerdict")
      .def_readonly("in_g1", &FamilyVerdict::in_g1)
      .def_readonly("in_g_ge2", &FamilyVerdict::in_g_ge2)
      .def_readonly("satisfies_lemma6", &FamilyVerdict::satisfies_lemma6)
      .def_readonly("konig_egervary", &FamilyVerdict::konig_egervary)
      .def_readonly("gamma_equals_nu", &FamilyVerdict::gamma_equals_nu)
      .def_readonly("reasons", &FamilyVerdict::reasons);

  py::class_<HypergraphFamilyVerdict>(m, "HypergraphFamilyVerdict")
      .def_readonly("in_h1", &HypergraphFamilyVerdict::in_h1)
      .def_readonly("in_ke1", &HypergraphFamilyVerdict::in_ke1)
      .def_readonly("base", &HypergraphFamilyVerdict::base);

  m.def("is_konig_egervary",
        [](const Graph& g, std::uint64_t budget) {
          return is_konig_egervary(g, limits_from(budget));
        },
        py::arg("graph"), py::arg("node_budget") = kDefaultBudget);
  m.def("is_in_g1",
        [](const Graph& g, const std::optional<Catalog>& catalog, std::uint64_t budget) {
          return is_in_g1(g, catalog_ptr(catalog), limits_from(budget));
        },
        py::arg("graph"), py::arg("catalog") = std::nullopt,
        py::arg("node_budget") = kDefaultBudget);
  m.def("is_in_g_ge2",
        [](const Graph& g, const std::optional<Catalog>& catalog, std::uint64_t budget) {
          return is_in_g_ge2(g, catalog_ptr(catalog), limits_from(budget));
        },
        py::arg("graph"), py::arg("catalog") = std::nullopt,
        py::arg("node_budget") = kDefaultBudget);
  m.def("satisfies_lemma6",
        [](const Graph& g, std::uint64_t budget) {
          return satisfies_lemma6(g, limits_from(budget));
        },
        py::arg("graph"), py::arg("node_budget") = kDefaultBudget);
  m.def("family_verdict",
        [](const Graph& g, const std::optional<Catalog>& catalog, std::uint64_t budget) {
          return family_verdict(g, catalog_ptr(catalog), limits_from(budget));
        },
        py::arg("graph"), py::arg("catalog") = std::nullopt,
        py::arg("node_budget") = kDefaultBudget);
  m.def("classify_hypergraph_family",
        [](const BlowupHypergraph& b, const std::optional<Catalog>& catalog, std::uint64_t budget) {
          return classify_hypergraph_family(b, catalog_ptr(catalog), limits_from(budget));
        },
        py::arg("blowup"), py::arg("catalog") = std::nullopt,
        py::arg("node_budget") = kDefaultBudget);

  py::class_<Prop2Verdict>(m, "Prop2Verdict")
      .def_readonly("nu_eq", &Prop2Verdict::nu_eq)
      .def_readonly("tau_eq", &Prop2Verdict::tau_eq)
      .def_readonly("gamma_eq", &Prop2Verdict::gamma_eq)
      .def("passed", &Prop2Verdict::pass);

  py::class_<AuditRecord>(m, "AuditRecord")
      .def_readonly("graph6", &AuditRecord::graph6)
      .def_readonly("k", &AuditRecord::k)
      .def_readonly("s", &AuditRecord::s)
      .def_readonly("base_gamma", &AuditRecord::base_gamma)
      .def_readonly("base_nu", &AuditRecord::base_nu)
      .def_readonly("base_tau", &AuditRecord::base_tau)
      .def_readonly("hyper_gamma", &AuditRecord::hyper_gamma)
      .def_readonly("hyper_nu", &AuditRecord::hyper_nu)
      .def_readonly("hyper_tau", &AuditRecord::hyper_tau)
      .def_readonly("base_bipartite", &AuditRecord::base_bipartite)
      .def_readonly("family", &AuditRecord::family)
      .def_readonly("prop2", &AuditRecord::prop2)
      .def_readonly("bounds_ok", &AuditRecord::bounds_ok)
      .def_property_readonly("thm2", [](const AuditRecord& r) { return to_string(r.thm2); })
      .def_property_readonly("thm3", [](const AuditRecord& r) { return to_string(r.thm3); })
      .def_readonly("corrected_ok", &AuditRecord::corrected_ok)
      .def_readonly("complete", &AuditRecord::complete)
      .def("to_jsonl", [](const AuditRecord& r) { return to_jsonl(r); });

  m.def("audit_graph",
        [](const Graph& g, int k, int s, const std::optional<Catalog>& catalog,
           std::uint64_t budget, bool fast) {
          AuditOptions options;
          options.limits = limits_from(budget);
          options.catalog = catalog_ptr(catalog);
          options.fast_prop2_shortcut = fast;
          return audit_graph(g, k, s, options);
        },
        py::arg("graph"), py::arg("k"), py::arg("s"), py::arg("catalog") = std::nullopt,
        py::arg("node_budget") = kDefaultBudget, py::arg("fast") = false);

  m.def("hunt_counterexamples",
        [](const std::vector<Graph>& corpus, const std::vector<std::pair<int, int>>& params,
           const std::optional<Catalog>& catalog, std::uint64_t budget, int jobs) {
          AuditOptions options;
          options.limits = limits_from(budget);
          options.catalog = catalog_ptr(catalog);
          std::vector<KS> ks;
          for (auto [k, s] : params) ks.push_back(KS{k, s});
          std::vector<AuditRecord> found;
          hunt_counterexamples(corpus, ks, [&](const AuditRecord& r) { found.push_back(r); },
                               options, jobs);
          return found;
        },
        py::arg("corpus"), py::arg("params"), py::arg("catalog") = std::nullopt,
        py::arg("node_budget") = kDefaultBudget, py::arg("jobs") = 1);

  m.def("verify_proposition2",
        [](const std::vector<Graph>& corpus, const std::vector<std::pair<int, int>>& params,
           const std::optional<Catalog>& catalog, std::uint64_t budget, int jobs) {
          AuditOptions options;
          options.limits = limits_from(budget);
          options.catalog = catalog_ptr(catalog);
          std::vector<KS> ks;
          for (auto [k, s] : params) ks.push_back(KS{k, s});
          Prop2Summary summary = verify_proposition2(corpus, ks, options, jobs);
          py::dict out;
          out["instances"] = summary.instances;
          out["nu_pass"] = summary.nu_pass;
          out["tau_pass"] = summary.tau_pass;
          out["gamma_pass"] = summary.gamma_pass;
          out["ok"] = summary.ok();
          if (summary.first_failure) out["first_failure"] = to_jsonl(*summary.first_failure);
          return out;
        },
        py::arg("corpus"), py::arg("params"), py::arg("catalog") = std::nullopt,
        py::arg("node_budget") = kDefaultBudget, py::arg("jobs") = 1);
}
