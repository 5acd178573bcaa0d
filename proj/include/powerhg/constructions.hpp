#pragma once

#include <vector>

#include "powerhg/graph.hpp"
#include "powerhg/hypergraph.hpp"

namespace powerhg {

Graph cycle(int p);
Graph path(int p);
Graph complete(int n);
Graph complete_bipartite(int a, int b);

// Two cycles C_p and C_q identified at a single common vertex (vertex 0 of
// each); order p+q-1, size p+q.
Graph wedge_cycles(int p, int q);

// Pendant edge added to every vertex.
Graph corona(const Graph& g);

// Pendant count per vertex, each at least one. The result satisfies
// V = End u Stem whenever g is connected of order >= 2.
Graph generalized_corona(const Graph& g, const std::vector<int>& pendants);

// Blow-up of Notation 1: each vertex becomes an s-set, each edge contributes
// a (k-2s)-set, and base edge {u,v} becomes the k-set u-block + v-block +
// edge-block. Vertex ids are assigned deterministically: vertex blocks first
// in base-vertex order, then edge blocks in base-edge order.
struct BlowupHypergraph {
  Hypergraph hypergraph;
  Graph base;
  int k = 0;
  int s = 0;
  std::vector<VertexSet> vertex_blocks;  // indexed by base vertex
  std::vector<VertexSet> edge_blocks;    // indexed by base edge position
};

BlowupHypergraph blow_up(const Graph& g, int k, int s);

}  // namespace powerhg
