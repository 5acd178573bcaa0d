#include "powerhg/canon.hpp"

#include <algorithm>

#include "powerhg/graph6.hpp"

namespace powerhg {
namespace detail {

namespace {

// Ordered partition of the vertex set into cells; refinement splits cells by
// neighbor counts against every cell until stable, then backtracking
// individualizes vertices of the first non-singleton cell. The canonical key
// is the minimum leaf over the whole search tree.
class Canonizer {
 public:
  Canonizer(int n, const VertexSet* adj) : n_(n), adj_(adj) {}

  CanonKey run(int* perm_out) {
    have_best_ = false;
    std::array<VertexSet, kCanonMaxOrder> cells;
    int nc = 0;
    if (n_ > 0) {
      cells[0] = all_vertices(n_);
      nc = 1;
      refine(cells, nc);
    }
    recurse(cells, nc);
    if (perm_out) {
      for (int v = 0; v < n_; ++v) perm_out[v] = best_perm_[static_cast<std::size_t>(v)];
    }
    return best_;
  }

 private:
  using Cells = std::array<VertexSet, kCanonMaxOrder>;

  void refine(Cells& cells, int& nc) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int ci = 0; ci < nc && !changed; ++ci) {
        VertexSet cell = cells[static_cast<std::size_t>(ci)];
        if ((cell & (cell - 1)) == 0) continue;
        for (int si = 0; si < nc; ++si) {
          VertexSet splitter = cells[static_cast<std::size_t>(si)];
          VertexSet bucket[kCanonMaxOrder + 1] = {};
          int minc = kCanonMaxOrder + 1, maxc = -1;
          for (VertexSet c = cell; c;) {
            int v = std::countr_zero(c);
            c &= c - 1;
            int k = set_size(adj_[v] & splitter);
            bucket[k] |= vertex_bit(v);
            minc = std::min(minc, k);
            maxc = std::max(maxc, k);
          }
          if (minc == maxc) continue;
          // Split: subcells in ascending count order replace the cell.
          VertexSet groups[kCanonMaxOrder + 1];
          int ng = 0;
          for (int k = minc; k <= maxc; ++k) {
            if (bucket[k]) groups[ng++] = bucket[k];
          }
          for (int t = nc - 1; t > ci; --t) {
            cells[static_cast<std::size_t>(t + ng - 1)] = cells[static_cast<std::size_t>(t)];
          }
          for (int t = 0; t < ng; ++t) cells[static_cast<std::size_t>(ci + t)] = groups[t];
          nc += ng - 1;
          changed = true;
          break;
        }
      }
    }
  }

  void recurse(const Cells& cells, int nc) {
    int branch = -1;
    for (int i = 0; i < nc; ++i) {
      VertexSet c = cells[static_cast<std::size_t>(i)];
      if (c & (c - 1)) {
        branch = i;
        break;
      }
    }
    if (branch < 0) {
      leaf(cells, nc);
      return;
    }
    VertexSet cell = cells[static_cast<std::size_t>(branch)];
    for (VertexSet c = cell; c;) {
      int v = std::countr_zero(c);
      c &= c - 1;
      if (interchangeable_with_earlier(cell, v)) continue;
      Cells next;
      int nn = 0;
      for (int i = 0; i < branch; ++i) next[static_cast<std::size_t>(nn++)] = cells[static_cast<std::size_t>(i)];
      next[static_cast<std::size_t>(nn++)] = vertex_bit(v);
      next[static_cast<std::size_t>(nn++)] = cell & ~vertex_bit(v);
      for (int i = branch + 1; i < nc; ++i) next[static_cast<std::size_t>(nn++)] = cells[static_cast<std::size_t>(i)];
      refine(next, nn);
      recurse(next, nn);
    }
  }

  // True when some earlier vertex u of the same cell satisfies
  // swap(u,v) = automorphism fixing everything else; branching on v would
  // repeat the u branch exactly.
  bool interchangeable_with_earlier(VertexSet cell, int v) const {
    for (VertexSet c = cell & (vertex_bit(v) - 1); c;) {
      int u = std::countr_zero(c);
      c &= c - 1;
      VertexSet both = vertex_bit(u) | vertex_bit(v);
      if ((adj_[u] & ~both) == (adj_[v] & ~both)) return true;
    }
    return false;
  }

  void leaf(const Cells& cells, int nc) {
    int order[kCanonMaxOrder];
    for (int i = 0; i < nc; ++i) order[i] = std::countr_zero(cells[static_cast<std::size_t>(i)]);
    CanonKey key;
    int t = 0;
    for (int j = 1; j < n_; ++j) {
      VertexSet col = adj_[order[j]];
      for (int i = 0; i < j; ++i, ++t) {
        if ((col >> order[i]) & 1) {
          if (t < 64) {
            key.w0 |= std::uint64_t{1} << (63 - t);
          } else {
            key.w1 |= std::uint64_t{1} << (127 - t);
          }
        }
      }
    }
    if (!have_best_ || key < best_) {
      best_ = key;
      have_best_ = true;
      for (int pos = 0; pos < n_; ++pos) best_perm_[static_cast<std::size_t>(order[pos])] = pos;
    }
  }

  int n_;
  const VertexSet* adj_;
  CanonKey best_;
  bool have_best_ = false;
  std::array<int, kCanonMaxOrder> best_perm_{};
};

}  // namespace

CanonKey canonical_key(int n, const VertexSet* adj, int* perm_out) {
  Canonizer c(n, adj);
  return c.run(perm_out);
}

}  // namespace detail

namespace {

void check_canon_order(const Graph& g) {
  if (g.order() > kCanonMaxOrder) {
    throw CapacityError("canonical labeling supports order <= " +
                        std::to_string(kCanonMaxOrder) + ", got " + std::to_string(g.order()));
  }
}

std::vector<int> canonical_perm(const Graph& g) {
  check_canon_order(g);
  std::array<VertexSet, kCanonMaxOrder> adj{};
  for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.adjacency(v);
  std::array<int, kCanonMaxOrder> perm{};
  detail::canonical_key(g.order(), adj.data(), perm.data());
  return std::vector<int>(perm.begin(), perm.begin() + g.order());
}

}  // namespace

Graph canonical_copy(const Graph& g) {
  return permuted(g, canonical_perm(g));
}

std::string canonical_form(const Graph& g) {
  return write_graph6(canonical_copy(g));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  check_canon_order(a);
  check_canon_order(b);
  std::array<VertexSet, kCanonMaxOrder> adj_a{}, adj_b{};
  for (int v = 0; v < a.order(); ++v) adj_a[static_cast<std::size_t>(v)] = a.adjacency(v);
  for (int v = 0; v < b.order(); ++v) adj_b[static_cast<std::size_t>(v)] = b.adjacency(v);
  return detail::canonical_key(a.order(), adj_a.data()) ==
         detail::canonical_key(b.order(), adj_b.data());
}

}  // namespace powerhg
