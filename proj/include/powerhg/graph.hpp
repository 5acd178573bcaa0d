#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "powerhg/errors.hpp"

namespace powerhg {

// Vertex sets are bitsets over at most 64 vertices. Every structure in this
// library stays within that capacity, so set intersection, domination and
// hitting tests are single word operations.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

constexpr bool set_contains(VertexSet s, int v) { return (s >> v) & VertexSet{1}; }

constexpr int set_size(VertexSet s) { return std::popcount(s); }

// Lowest vertex id in a non-empty set.
constexpr int first_vertex(VertexSet s) { return std::countr_zero(s); }

constexpr VertexSet all_vertices(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

std::vector<int> set_to_vertices(VertexSet s);
VertexSet vertices_to_set(const std::vector<int>& vs);

// Unordered edge, normalized to first < second on construction of a Graph.
using Edge = std::pair<int, int>;

// Simple undirected graph with dense vertex ids 0..order-1. Immutable after
// construction and safe to share read-only across threads. The edge list is
// kept sorted lexicographically; matching certificates index into it.
class Graph {
 public:
  Graph() = default;
  Graph(int order, std::vector<Edge> edges);

  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Open neighborhood of v as a bitset.
  VertexSet adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighborhood(int v) const { return adj_[static_cast<std::size_t>(v)] | vertex_bit(v); }
  int degree(int v) const { return set_size(adjacency(v)); }
  bool has_edge(int u, int v) const { return set_contains(adjacency(u), v); }
  VertexSet vertices() const { return all_vertices(order_); }

  // Edge as a two-vertex set.
  VertexSet edge_set(int index) const {
    const Edge& e = edges_[static_cast<std::size_t>(index)];
    return vertex_bit(e.first) | vertex_bit(e.second);
  }

  bool operator==(const Graph& other) const noexcept {
    return order_ == other.order_ && edges_ == other.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
};

// Two sides of a bipartition, normalized so |side_x| <= |side_y|; on a tie the
// side containing vertex 0 is side_x.
struct Bipartition {
  VertexSet side_x = 0;
  VertexSet side_y = 0;
};

// True iff every vertex is reachable from vertex 0 (vacuously true for the
// empty graph).
bool is_connected(const Graph& g);

// Returns a normalized bipartition iff g has no odd cycle.
std::optional<Bipartition> is_bipartite(const Graph& g);

int min_degree(const Graph& g);

// Vertices of degree exactly one.
VertexSet end_vertices(const Graph& g);

// Vertices adjacent to at least one end-vertex.
VertexSet stems(const Graph& g);

// Connected component containing v, as a vertex set.
VertexSet component_of(const Graph& g, int v);

// All connected components, ordered by their lowest vertex id.
std::vector<VertexSet> components(const Graph& g);

// Components of the subgraph induced on `within`, as subsets of `within`.
std::vector<VertexSet> induced_components(const Graph& g, VertexSet within);

// Relabeled copy: vertex v becomes perm[v].
Graph permuted(const Graph& g, const std::vector<int>& perm);

// Subgraph induced on `keep`. Vertices are renumbered densely in increasing
// id order; if old_ids is non-null it receives the new->old mapping.
Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* old_ids = nullptr);

}  // namespace powerhg
