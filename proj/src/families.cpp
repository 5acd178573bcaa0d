#include "powerhg/families.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "powerhg/canon.hpp"
#include "powerhg/graph6.hpp"

namespace powerhg {

namespace {

std::string vertex_list(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : set_to_vertices(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

Catalog load_catalog(std::istream& in) {
  Catalog catalog;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab != 1) {
      throw ConfigError("catalog line " + std::to_string(lineno) +
                        ": expected \"label<TAB>graph6\"");
    }
    char label = line[0];
    std::string code = line.substr(tab + 1);
    Graph g;
    try {
      g = parse_graph6(code);
    } catch (const Error& e) {
      throw ConfigError("catalog line " + std::to_string(lineno) + ": " + e.what());
    }
    catalog.push_back(CatalogEntry{label, std::move(g), code});
  }
  if (catalog.size() != 9) {
    throw ConfigError("catalog must contain exactly 9 graphs, found " +
                      std::to_string(catalog.size()));
  }
  for (int i = 0; i < 9; ++i) {
    char want = static_cast<char>('a' + i);
    if (catalog[static_cast<std::size_t>(i)].label != want) {
      throw ConfigError(std::string("catalog labels must run a..i in order; entry ") +
                        std::to_string(i + 1) + " is '" +
                        catalog[static_cast<std::size_t>(i)].label + "'");
    }
  }
  for (const CatalogEntry& entry : catalog) {
    const Graph& g = entry.graph;
    std::string where = std::string("catalog entry (") + entry.label + ") " + entry.graph6;
    if (!is_connected(g)) throw ConfigError(where + ": not connected");
    if (is_bipartite(g)) throw ConfigError(where + ": bipartite");
    if (min_degree(g) < 2) throw ConfigError(where + ": minimum degree < 2");
    int gamma = domination_number_graph(g).value;
    int nu = matching_number_graph(g).value;
    if (gamma != nu) {
      throw ConfigError(where + ": gamma = " + std::to_string(gamma) +
                        " differs from nu = " + std::to_string(nu));
    }
  }
  return catalog;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open catalog file: " + path);
  return load_catalog(in);
}

bool is_konig_egervary(const Graph& g, const SolverLimits& limits) {
  return transversal_number_graph(g, limits).value == matching_number_graph(g).value;
}

namespace {

// Clause ii of the G1 definition, evaluated on one component. `comp` lives in
// g's vertex space; stem_neighbors = N_G(Stem(G)).
bool g1_clause_bipartite(const Graph& g, VertexSet comp, VertexSet stem_neighbors,
                         std::string* why) {
  std::vector<int> old_ids;
  Graph c = induced_subgraph(g, comp, &old_ids);
  auto bip = is_bipartite(c);
  if (!bip) {
    *why = "not bipartite";
    return false;
  }
  int nx = set_size(bip->side_x);
  int ny = set_size(bip->side_y);
  if (nx == ny) {
    *why = "bipartition sides have equal size";
    return false;
  }
  // side_x is the strictly smaller side V1; U must land inside V2.
  VertexSet u_set = 0;
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    if (set_contains(stem_neighbors, old_ids[i])) u_set |= vertex_bit(static_cast<int>(i));
  }
  if (u_set == 0) {
    *why = "no neighbor of a stem inside the component";
    return false;
  }
  if (u_set & bip->side_x) {
    *why = "a stem neighbor lies in the small side V1";
    return false;
  }
  for (int x1 : set_to_vertices(bip->side_x)) {
    for (int x2 : set_to_vertices(bip->side_x)) {
      if (x2 <= x1) continue;
      if ((c.adjacency(x1) & c.adjacency(x2)) == 0) continue;
      VertexSet pair = vertex_bit(x1) | vertex_bit(x2);
      int count = 0;
      for (int y : set_to_vertices(bip->side_y & ~u_set)) {
        if (c.adjacency(y) == pair) ++count;
      }
      if (count < 2) {
        *why = "vertices " + std::to_string(x1) + "," + std::to_string(x2) +
               " of V1 share a neighbor but lack two private common neighbors outside U";
        return false;
      }
    }
  }
  return true;
}

// Clause iii: component isomorphic to catalog entry (f)..(i) and gamma stays
// unchanged when any non-empty proper subset of the stem neighbors U is
// deleted.
bool g1_clause_catalog(const Graph& g, VertexSet comp, VertexSet stem_neighbors,
                       const Catalog* catalog, const SolverLimits& limits, std::string* why) {
  if (!catalog) {
    throw ConfigError("G1 membership reached clause iii but no catalog is loaded");
  }
  std::vector<int> old_ids;
  Graph c = induced_subgraph(g, comp, &old_ids);
  bool matched = false;
  char matched_label = '?';
  for (const CatalogEntry& entry : *catalog) {
    if (entry.label < 'f') continue;
    if (entry.graph.order() <= kCanonMaxOrder && c.order() == entry.graph.order() &&
        are_isomorphic(c, entry.graph)) {
      matched = true;
      matched_label = entry.label;
      break;
    }
  }
  if (!matched) {
    *why = "not isomorphic to catalog entries (f)-(i)";
    return false;
  }
  VertexSet u_set = 0;
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    if (set_contains(stem_neighbors, old_ids[i])) u_set |= vertex_bit(static_cast<int>(i));
  }
  VertexSet full = c.vertices();
  // The chain "V1 subset of U proper-subset of V(G_j)" makes U itself proper.
  if (u_set == full) {
    *why = std::string("matches catalog entry (") + matched_label +
           ") but every vertex neighbors a stem";
    return false;
  }
  int gamma = domination_number_graph(c, limits).value;
  for (VertexSet v1 = u_set; v1 != 0; v1 = (v1 - 1) & u_set) {
    Graph rest = induced_subgraph(c, full & ~v1);
    if (domination_number_graph(rest, limits).value != gamma) {
      *why = std::string("matches catalog entry (") + matched_label +
             ") but deleting " + vertex_list(v1) + " changes gamma";
      return false;
    }
  }
  *why = std::string("catalog entry (") + matched_label + ")";
  return true;
}

}  // namespace

G1Result is_in_g1(const Graph& g, const Catalog* catalog, const SolverLimits& limits) {
  if (!is_connected(g)) throw ParameterError("G1 membership is defined for connected graphs");
  G1Result result;
  if (g.order() == 2 && g.size() == 1) {
    result.member = true;
    result.reasons.push_back("g is K2");
    return result;
  }
  VertexSet ends = end_vertices(g);
  VertexSet stem_set = stems(g);
  if (g.order() >= 3 && (ends | stem_set) == g.vertices()) {
    result.member = true;
    result.reasons.push_back("g is a generalized corona (V = End u Stem)");
    return result;
  }
  VertexSet stem_neighbors = 0;
  for (int v : set_to_vertices(stem_set)) stem_neighbors |= g.adjacency(v);
  VertexSet rest = g.vertices() & ~(ends | stem_set);
  result.member = true;
  for (VertexSet comp : induced_components(g, rest)) {
    std::string tag = "component " + vertex_list(comp) + ": ";
    if (set_size(comp) == 1) {
      result.reasons.push_back(tag + "trivial");
      continue;
    }
    std::string why_ii;
    if (g1_clause_bipartite(g, comp, stem_neighbors, &why_ii)) {
      result.reasons.push_back(tag + "bipartite clause");
      continue;
    }
    std::string why_iii;
    if (g1_clause_catalog(g, comp, stem_neighbors, catalog, limits, &why_iii)) {
      result.reasons.push_back(tag + why_iii);
      continue;
    }
    result.member = false;
    result.reasons.push_back(tag + "fails ii (" + why_ii + ") and iii (" + why_iii + ")");
  }
  if (result.member && result.reasons.empty()) {
    result.reasons.push_back("End u Stem removes every vertex");
  }
  return result;
}

bool is_in_g_ge2(const Graph& g, const Catalog* catalog, const SolverLimits& limits) {
  if (!is_connected(g)) throw ParameterError("G_{>=2} membership is defined for connected graphs");
  bool semantic = g.order() >= 1 && min_degree(g) >= 2 && !is_bipartite(g) &&
                  domination_number_graph(g, limits).value == matching_number_graph(g).value;
  if (catalog && !catalog->empty()) {
    int max_order = 0;
    for (const CatalogEntry& entry : *catalog) max_order = std::max(max_order, entry.graph.order());
    if (g.order() <= max_order && g.order() <= kCanonMaxOrder) {
      bool listed = std::any_of(catalog->begin(), catalog->end(), [&](const CatalogEntry& e) {
        return e.graph.order() == g.order() && are_isomorphic(e.graph, g);
      });
      if (listed != semantic) {
        throw ConfigError("catalog disagrees with the semantic G_{>=2} test on " +
                          write_graph6(g));
      }
    }
  }
  return semantic;
}

namespace {

bool lemma6_orientation(const Graph& g, VertexSet x, VertexSet y, int gamma, int nu) {
  if (nu != set_size(x) || gamma != set_size(x)) return false;
  for (int x1 : set_to_vertices(x)) {
    for (int x2 : set_to_vertices(x)) {
      if (x2 <= x1) continue;
      if ((g.adjacency(x1) & g.adjacency(x2)) == 0) continue;
      VertexSet pair = vertex_bit(x1) | vertex_bit(x2);
      int count = 0;
      for (int yv : set_to_vertices(y)) {
        if (g.adjacency(yv) == pair) ++count;
      }
      if (count < 2) return false;
    }
  }
  return true;
}

}  // namespace

bool satisfies_lemma6(const Graph& g, const SolverLimits& limits) {
  if (!is_connected(g)) throw ParameterError("the bipartite test requires a connected graph");
  auto bip = is_bipartite(g);
  if (!bip) throw ParameterError("the bipartite test requires a bipartite graph");
  if (min_degree(g) < 2) {
    throw ParameterError("the bipartite test requires minimum degree >= 2");
  }
  int gamma = domination_number_graph(g, limits).value;
  int nu = matching_number_graph(g).value;
  if (lemma6_orientation(g, bip->side_x, bip->side_y, gamma, nu)) return true;
  // Equal side sizes leave the orientation of X ambiguous; accept either.
  if (set_size(bip->side_x) == set_size(bip->side_y)) {
    return lemma6_orientation(g, bip->side_y, bip->side_x, gamma, nu);
  }
  return false;
}

FamilyVerdict family_verdict(const Graph& g, const Catalog* catalog, const SolverLimits& limits) {
  if (!is_connected(g)) throw ParameterError("family verdict requires a connected graph");
  FamilyVerdict verdict;
  int gamma = domination_number_graph(g, limits).value;
  int nu = matching_number_graph(g).value;
  int tau = transversal_number_graph(g, limits).value;
  verdict.gamma_equals_nu = gamma == nu;
  verdict.konig_egervary = tau == nu;

  G1Result g1 = is_in_g1(g, catalog, limits);
  verdict.in_g1 = g1.member;
  if (g1.member) {
    verdict.reasons.push_back("in G1");
    for (const std::string& r : g1.reasons) verdict.reasons.push_back("  " + r);
  }
  verdict.in_g_ge2 = is_in_g_ge2(g, catalog, limits);
  if (verdict.in_g_ge2) verdict.reasons.push_back("in G_{>=2} (non-bipartite, delta >= 2, gamma = nu)");
  auto bip = is_bipartite(g);
  if (bip && min_degree(g) >= 2) {
    verdict.satisfies_lemma6 = satisfies_lemma6(g, limits);
    if (verdict.satisfies_lemma6) verdict.reasons.push_back("satisfies the bipartite pair condition");
  }
  if (!verdict.in_g1 && !g1.reasons.empty()) {
    verdict.reasons.push_back("not in G1: " + g1.reasons.back());
  }

  // The three family tests partition connected graphs of order >= 2 by
  // (minimum degree, bipartiteness), so their disjunction must coincide with
  // gamma = nu.
  if (g.order() >= 2) {
    bool covered = verdict.in_g1 || verdict.in_g_ge2 || verdict.satisfies_lemma6;
    if (covered != verdict.gamma_equals_nu) {
      throw Error("internal error: family partition disagrees with gamma = nu on " +
                  write_graph6(g));
    }
  }
  return verdict;
}

HypergraphFamilyVerdict classify_hypergraph_family(const BlowupHypergraph& b,
                                                   const Catalog* catalog,
                                                   const SolverLimits& limits) {
  HypergraphFamilyVerdict verdict;
  verdict.base = family_verdict(b.base, catalog, limits);
  verdict.in_h1 = is_bipartite(b.base).has_value();
  verdict.in_ke1 = verdict.base.konig_egervary;
  return verdict;
}

}  // namespace powerhg
