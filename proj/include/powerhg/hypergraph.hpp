#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powerhg/graph.hpp"

namespace powerhg {

// Hypergraph on dense vertex ids 0..order-1. Hyperedges are vertex bitsets
// and keep their construction order; matching certificates index into the
// edge sequence. Structural invariants are checked by validate(), not the
// constructor, so malformed inputs can be reported with precise errors.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int order, std::vector<VertexSet> edges);

  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  VertexSet vertices() const { return all_vertices(order_); }

 private:
  int order_ = 0;
  std::vector<VertexSet> edges_;
};

// Checks the type invariants: edges non-empty, within vertex range, no
// duplicates; with uniform_k, additionally that every edge has exactly k
// vertices. Throws ValidationError with the specific kind.
void validate(const Hypergraph& h, std::optional<int> uniform_k = std::nullopt);

// Number of hyperedges containing v.
int vertex_degree(const Hypergraph& h, int v);

// Graph on the same vertex set where u~v iff some hyperedge contains both.
// Dominating sets of h are exactly dominating sets of this graph.
Graph primal_graph(const Hypergraph& h);

// Text interchange format: first line "order k", then one hyperedge per line
// as space-separated vertex ids.
std::string write_hypergraph_text(const Hypergraph& h, int k);
Hypergraph parse_hypergraph_text(std::string_view text, int* k_out = nullptr);

}  // namespace powerhg
