#include "powerhg/graph.hpp"

#include <algorithm>
#include <string>

namespace powerhg {

std::vector<int> set_to_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

VertexSet vertices_to_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vertex_bit(v);
  return s;
}

Graph::Graph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  if (order < 0 || order > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(order) + " outside supported range [0, 64]");
  }
  for (Edge& e : edges_) {
    if (e.first == e.second) {
      throw ValidationError(ValidationError::Kind::kLoop,
                            "loop at vertex " + std::to_string(e.first));
    }
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= order_) {
      throw ValidationError(ValidationError::Kind::kVertexOutOfRange,
                            "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                "} out of range for order " + std::to_string(order_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw ValidationError(ValidationError::Kind::kDuplicateEdge,
                          "duplicate edge {" + std::to_string(dup->first) + "," +
                              std::to_string(dup->second) + "}");
  }
  adj_.assign(static_cast<std::size_t>(order_), 0);
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.first)] |= vertex_bit(e.second);
    adj_[static_cast<std::size_t>(e.second)] |= vertex_bit(e.first);
  }
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return set_size(component_of(g, 0)) == g.order();
}

VertexSet component_of(const Graph& g, int v) {
  VertexSet seen = vertex_bit(v);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f;) {
      int u = std::countr_zero(f);
      f &= f - 1;
      next |= g.adjacency(u);
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g) {
  return induced_components(g, g.vertices());
}

std::vector<VertexSet> induced_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet remaining = within;
  while (remaining) {
    int v = first_vertex(remaining);
    VertexSet comp = vertex_bit(v);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f;) {
        int u = std::countr_zero(f);
        f &= f - 1;
        next |= g.adjacency(u) & within;
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  VertexSet side[2] = {0, 0};
  for (int start = 0; start < g.order(); ++start) {
    if (color[static_cast<std::size_t>(start)] != -1) continue;
    color[static_cast<std::size_t>(start)] = 0;
    side[0] |= vertex_bit(start);
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      int cu = color[static_cast<std::size_t>(u)];
      for (VertexSet nb = g.adjacency(u); nb;) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        int& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - cu;
          side[cw] |= vertex_bit(w);
          stack.push_back(w);
        } else if (cw == cu) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  int n0 = set_size(side[0]);
  int n1 = set_size(side[1]);
  // Normalize: smaller side is side_x; vertex 0 always lands in side[0], so a
  // tie keeps the side containing vertex 0 as side_x.
  if (n0 <= n1) {
    b.side_x = side[0];
    b.side_y = side[1];
  } else {
    b.side_x = side[1];
    b.side_y = side[0];
  }
  return b;
}

int min_degree(const Graph& g) {
  if (g.order() < 1) throw ParameterError("min_degree requires a non-empty graph");
  int best = kMaxVertices + 1;
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

VertexSet end_vertices(const Graph& g) {
  VertexSet ends = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) ends |= vertex_bit(v);
  }
  return ends;
}

VertexSet stems(const Graph& g) {
  VertexSet ends = end_vertices(g);
  VertexSet st = 0;
  for (VertexSet e = ends; e;) {
    int v = std::countr_zero(e);
    e &= e - 1;
    st |= g.adjacency(v);
  }
  return st;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw ParameterError("permutation size does not match graph order");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    edges.emplace_back(perm[static_cast<std::size_t>(e.first)],
                       perm[static_cast<std::size_t>(e.second)]);
  }
  return Graph(g.order(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* old_ids) {
  std::vector<int> old_of_new = set_to_vertices(keep);
  std::vector<int> new_of_old(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < old_of_new.size(); ++i) {
    new_of_old[static_cast<std::size_t>(old_of_new[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (set_contains(keep, e.first) && set_contains(keep, e.second)) {
      edges.emplace_back(new_of_old[static_cast<std::size_t>(e.first)],
                         new_of_old[static_cast<std::size_t>(e.second)]);
    }
  }
  if (old_ids) *old_ids = old_of_new;
  return Graph(static_cast<int>(old_of_new.size()), std::move(edges));
}

}  // namespace powerhg
