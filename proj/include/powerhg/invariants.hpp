#pragma once

#include <cstdint>
#include <vector>

#include "powerhg/graph.hpp"
#include "powerhg/hypergraph.hpp"

namespace powerhg {

// Upper bound for exact search; exceeding it raises ResourceError, never a
// wrong answer.
struct SolverLimits {
  std::uint64_t node_budget = 100'000'000;
};

// An invariant value together with a witness attaining it: a vertex set for
// domination and transversal numbers, a set of edge indices for matching
// numbers. Every solver re-validates the witness against the definitional
// predicate before returning.
struct InvariantCertificate {
  int value = 0;
  std::vector<int> witness;
};

// ---- definitional predicates -------------------------------------------

bool is_dominating_set(const Graph& g, VertexSet d);
bool is_dominating_set(const Hypergraph& h, VertexSet d);
bool is_vertex_cover(const Graph& g, VertexSet t);
bool is_transversal(const Hypergraph& h, VertexSet t);
bool is_matching(const Graph& g, const std::vector<int>& edge_indices);
bool is_matching(const Hypergraph& h, const std::vector<int>& edge_indices);

// ---- exact solvers -------------------------------------------------------

// Minimum dominating set by branch and bound on the lowest-index undominated
// vertex, with a greedy upper bound and a disjoint-closed-neighborhood lower
// bound.
InvariantCertificate domination_number_graph(const Graph& g, const SolverLimits& limits = {});

// Maximum matching by augmenting-path search with blossom contraction.
// Cross-validated against an independent bitmask DP below order 10.
InvariantCertificate matching_number_graph(const Graph& g);

// Minimum vertex cover via the hitting-set engine on the edge sets.
InvariantCertificate transversal_number_graph(const Graph& g, const SolverLimits& limits = {});

// Hypergraph domination through the primal-graph reduction with closed-twin
// collapse (blown-up blocks are mutual twins, so blow-up instances shrink to
// roughly base-graph size).
InvariantCertificate domination_number_hypergraph(const Hypergraph& h,
                                                  const SolverLimits& limits = {});

// Maximum set of pairwise disjoint hyperedges by branch and bound.
InvariantCertificate matching_number_hypergraph(const Hypergraph& h,
                                                const SolverLimits& limits = {});

// Minimum hitting set over the hyperedges.
InvariantCertificate transversal_number_hypergraph(const Hypergraph& h,
                                                   const SolverLimits& limits = {});

// ---- independent exhaustive oracles --------------------------------------

// Exact values by subset enumeration in increasing cardinality, independent
// of the branch-and-bound/blossom paths. Hard cap of 2^24 examined subsets.
int oracle_domination(const Graph& g);
int oracle_domination(const Hypergraph& h);
int oracle_matching(const Graph& g);
int oracle_matching(const Hypergraph& h);
int oracle_transversal(const Graph& g);
int oracle_transversal(const Hypergraph& h);

}  // namespace powerhg
