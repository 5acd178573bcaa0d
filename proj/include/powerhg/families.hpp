#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "powerhg/constructions.hpp"
#include "powerhg/graph.hpp"
#include "powerhg/invariants.hpp"

namespace powerhg {

// One entry of the nine-graph catalog for the family of connected
// non-bipartite graphs with minimum degree >= 2 and equal domination and
// matching numbers. Labels run (a)..(i); entries (f)..(i) are the ones the
// G1 definition's third clause refers to.
struct CatalogEntry {
  char label = '?';
  Graph graph;
  std::string graph6;
};

using Catalog = std::vector<CatalogEntry>;

// Loads "label<TAB>graph6" lines. Fails with ConfigError unless there are
// exactly nine entries labeled a..i, each connected, non-bipartite, with
// minimum degree >= 2 and gamma = nu (checked against the exact solvers).
Catalog load_catalog(std::istream& in);
Catalog load_catalog_file(const std::string& path);

// True iff tau(g) = nu(g).
bool is_konig_egervary(const Graph& g, const SolverLimits& limits = {});

struct G1Result {
  bool member = false;
  std::vector<std::string> reasons;
};

// Structural test for the family G1: g is K2, or a generalized corona, or
// every component of g minus (End u Stem) satisfies one of the three
// clauses (trivial / bipartite pair condition / catalog graph (f)-(i) with
// gamma stable under deleting stem-neighbor subsets). The catalog is only
// required when some component reaches the third clause; reaching it without
// a catalog raises ConfigError.
G1Result is_in_g1(const Graph& g, const Catalog* catalog = nullptr,
                  const SolverLimits& limits = {});

// Semantic test for the family G_{>=2}: connected, minimum degree >= 2,
// non-bipartite, gamma = nu. When a catalog is supplied and g is within its
// order range, membership is cross-checked against catalog isomorphism.
bool is_in_g_ge2(const Graph& g, const Catalog* catalog = nullptr,
                 const SolverLimits& limits = {});

// Both conditions of the bipartite min-degree->=2 characterization: (1)
// nu = gamma = |X| for the smaller side X, and (2) every two vertices of X
// with a common neighbor have two private degree-2 common neighbors in Y.
// Requires g connected bipartite with minimum degree >= 2.
bool satisfies_lemma6(const Graph& g, const SolverLimits& limits = {});

struct FamilyVerdict {
  bool in_g1 = false;
  bool in_g_ge2 = false;
  bool satisfies_lemma6 = false;
  bool konig_egervary = false;
  bool gamma_equals_nu = false;
  std::vector<std::string> reasons;
};

// All family flags for a connected graph. Asserts the three-family partition:
// gamma_equals_nu == (in_g1 or in_g_ge2 or satisfies_lemma6) for every
// connected graph of order >= 2; a violation is an implementation bug and
// throws.
FamilyVerdict family_verdict(const Graph& g, const Catalog* catalog = nullptr,
                             const SolverLimits& limits = {});

// Classification of a blow-up through its base graph: base bipartite (the
// H1 family for s < k/2), base Koenig-Egervary (the KE1 family), and base
// gamma = nu (the defining condition of the s = k/2 family).
struct HypergraphFamilyVerdict {
  bool in_h1 = false;
  bool in_ke1 = false;
  FamilyVerdict base;
};

HypergraphFamilyVerdict classify_hypergraph_family(const BlowupHypergraph& b,
                                                   const Catalog* catalog = nullptr,
                                                   const SolverLimits& limits = {});

}  // namespace powerhg
