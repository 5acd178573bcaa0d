#include "powerhg/constructions.hpp"

#include <string>

namespace powerhg {

Graph cycle(int p) {
  if (p < 3) throw ParameterError("cycle needs p >= 3, got " + std::to_string(p));
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) edges.emplace_back(i, (i + 1) % p);
  return Graph(p, std::move(edges));
}

Graph path(int p) {
  if (p < 1) throw ParameterError("path needs p >= 1, got " + std::to_string(p));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < p; ++i) edges.emplace_back(i, i + 1);
  return Graph(p, std::move(edges));
}

Graph complete(int n) {
  if (n < 1) throw ParameterError("complete needs n >= 1, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw ParameterError("complete_bipartite needs a, b >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph(a + b, std::move(edges));
}

Graph wedge_cycles(int p, int q) {
  if (p < 3 || q < 3) throw ParameterError("wedge_cycles needs p, q >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) edges.emplace_back(i, (i + 1) % p);
  // Second cycle reuses vertex 0: 0, p, p+1, ..., p+q-2.
  edges.emplace_back(0, p);
  for (int i = 0; i + 1 < q - 1; ++i) edges.emplace_back(p + i, p + i + 1);
  edges.emplace_back(p + q - 2, 0);
  return Graph(p + q - 1, std::move(edges));
}

Graph corona(const Graph& g) {
  return generalized_corona(g, std::vector<int>(static_cast<std::size_t>(g.order()), 1));
}

Graph generalized_corona(const Graph& g, const std::vector<int>& pendants) {
  if (static_cast<int>(pendants.size()) != g.order()) {
    throw ParameterError("pendant counts must cover every vertex");
  }
  int total = g.order();
  for (int c : pendants) {
    if (c < 1) throw ParameterError("every pendant count must be >= 1");
    total += c;
  }
  if (total > kMaxVertices) {
    throw CapacityError("generalized corona of order " + std::to_string(total) +
                        " exceeds capacity 64");
  }
  std::vector<Edge> edges = g.edges();
  int next = g.order();
  for (int v = 0; v < g.order(); ++v) {
    for (int i = 0; i < pendants[static_cast<std::size_t>(v)]; ++i) edges.emplace_back(v, next++);
  }
  return Graph(total, std::move(edges));
}

BlowupHypergraph blow_up(const Graph& g, int k, int s) {
  if (k < 3) throw ParameterError("blow-up needs k >= 3, got " + std::to_string(k));
  if (s < 1 || 2 * s > k) {
    throw ParameterError("blow-up needs 1 <= s <= k/2, got s = " + std::to_string(s) +
                         ", k = " + std::to_string(k));
  }
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw ParameterError("blow-up requires a graph without isolated vertices (vertex " +
                           std::to_string(v) + " is isolated)");
    }
  }
  int n = g.order();
  int m = g.size();
  int eblock = k - 2 * s;
  long long order = static_cast<long long>(s) * n + static_cast<long long>(eblock) * m;
  if (order > kMaxVertices) {
    throw CapacityError("blow-up order " + std::to_string(order) + " exceeds capacity 64");
  }

  BlowupHypergraph out;
  out.base = g;
  out.k = k;
  out.s = s;
  out.vertex_blocks.resize(static_cast<std::size_t>(n));
  out.edge_blocks.resize(static_cast<std::size_t>(m));
  for (int v = 0; v < n; ++v) {
    VertexSet block = 0;
    for (int i = 0; i < s; ++i) block |= vertex_bit(v * s + i);
    out.vertex_blocks[static_cast<std::size_t>(v)] = block;
  }
  for (int j = 0; j < m; ++j) {
    VertexSet block = 0;
    for (int i = 0; i < eblock; ++i) block |= vertex_bit(n * s + j * eblock + i);
    out.edge_blocks[static_cast<std::size_t>(j)] = block;
  }
  std::vector<VertexSet> hyperedges;
  hyperedges.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const Edge& e = g.edges()[static_cast<std::size_t>(j)];
    hyperedges.push_back(out.vertex_blocks[static_cast<std::size_t>(e.first)] |
                         out.vertex_blocks[static_cast<std::size_t>(e.second)] |
                         out.edge_blocks[static_cast<std::size_t>(j)]);
  }
  out.hypergraph = Hypergraph(static_cast<int>(order), std::move(hyperedges));
  validate(out.hypergraph, k);
  return out;
}

}  // namespace powerhg
