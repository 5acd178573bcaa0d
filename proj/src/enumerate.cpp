#include "powerhg/enumerate.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

#include "powerhg/canon.hpp"

namespace powerhg {

namespace {

// Pair index t = j*(j-1)/2 + i for i < j, the same stream order the canonical
// key uses, so a canonical key converts directly into a canonical edge mask.
struct PairTable {
  std::array<std::pair<int, int>, 36> pairs{};
  constexpr PairTable() {
    int t = 0;
    for (int j = 1; j < 9; ++j) {
      for (int i = 0; i < j; ++i) pairs[static_cast<std::size_t>(t++)] = {i, j};
    }
  }
};

constexpr PairTable kPairs{};

std::uint64_t key_to_mask(const detail::CanonKey& key, int num_pairs) {
  std::uint64_t mask = 0;
  for (int t = 0; t < num_pairs; ++t) {
    if ((key.w0 >> (63 - t)) & 1) mask |= std::uint64_t{1} << t;
  }
  return mask;
}

std::uint64_t canonical_mask(int order, std::uint64_t edge_mask, int num_pairs) {
  std::array<VertexSet, 9> adj{};
  for (std::uint64_t m = edge_mask; m;) {
    int t = std::countr_zero(m);
    m &= m - 1;
    auto [i, j] = kPairs.pairs[static_cast<std::size_t>(t)];
    adj[static_cast<std::size_t>(i)] |= vertex_bit(j);
    adj[static_cast<std::size_t>(j)] |= vertex_bit(i);
  }
  return key_to_mask(detail::canonical_key(order, adj.data()), num_pairs);
}

Graph mask_to_graph(int order, std::uint64_t edge_mask) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::popcount(edge_mask)));
  for (std::uint64_t m = edge_mask; m;) {
    int t = std::countr_zero(m);
    m &= m - 1;
    edges.push_back(kPairs.pairs[static_cast<std::size_t>(t)]);
  }
  return Graph(order, std::move(edges));
}

}  // namespace

void for_each_connected_graph(int order, const GraphSink& sink, const GraphFilter& filter) {
  if (order < 1 || order > kMaxEnumerationOrder) {
    throw CapacityError("enumeration supports order 1.." +
                        std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(order));
  }
  const int num_pairs = order * (order - 1) / 2;

  std::vector<std::uint64_t> reps = {0};
  for (int level = 0; level <= num_pairs; ++level) {
    for (std::uint64_t rep : reps) {
      Graph g = mask_to_graph(order, rep);
      if (!is_connected(g)) continue;
      if (filter && !filter(g)) continue;
      sink(g);
    }
    if (level == num_pairs) break;

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(reps.size() * 4 + 16);
    std::vector<std::uint64_t> next;
    for (std::uint64_t rep : reps) {
      for (int t = 0; t < num_pairs; ++t) {
        std::uint64_t bit = std::uint64_t{1} << t;
        if (rep & bit) continue;
        std::uint64_t cm = canonical_mask(order, rep | bit, num_pairs);
        if (seen.insert(cm).second) next.push_back(cm);
      }
    }
    std::sort(next.begin(), next.end());
    reps = std::move(next);
  }
}

std::vector<Graph> enumerate_connected_graphs(int order, const GraphFilter& filter) {
  std::vector<Graph> out;
  for_each_connected_graph(order, [&](const Graph& g) { out.push_back(g); }, filter);
  return out;
}

std::vector<Graph> connected_graphs_upto(int max_order, int max_edges, bool skip_trivial) {
  std::vector<Graph> out;
  for (int n = skip_trivial ? 2 : 1; n <= max_order; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      if (max_edges >= 0 && g.size() > max_edges) return;
      out.push_back(g);
    });
  }
  return out;
}

}  // namespace powerhg
