#include "powerhg/invariants.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace powerhg {

namespace {

constexpr std::uint64_t kOracleCap = std::uint64_t{1} << 24;

[[noreturn]] void certificate_bug(const char* what) {
  throw Error(std::string("internal error: certificate failed re-validation (") + what + ")");
}

std::vector<int> mask_witness(VertexSet mask) { return set_to_vertices(mask); }

// ---- hitting-set branch and bound ----------------------------------------
//
// Minimum set of elements of [0,n) meeting every set. Domination is the
// special case sets = closed neighborhoods; vertex cover / transversal is
// sets = (hyper)edges. Branches on the lowest-index unhit set, candidates in
// ascending element order, so certificates are reproducible.
class HittingSetSolver {
 public:
  HittingSetSolver(int n, std::vector<VertexSet> sets, std::uint64_t budget)
      : n_(n), sets_(std::move(sets)), budget_(budget) {}

  InvariantCertificate solve() {
    VertexSet greedy = greedy_cover();
    best_size_ = set_size(greedy);
    best_mask_ = greedy;
    search(0, 0);
    return {best_size_, mask_witness(best_mask_)};
  }

 private:
  VertexSet greedy_cover() const {
    VertexSet chosen = 0;
    while (true) {
      int best_v = -1, best_gain = 0;
      for (int v = 0; v < n_; ++v) {
        if (set_contains(chosen, v)) continue;
        int gain = 0;
        for (VertexSet s : sets_) {
          if ((s & chosen) == 0 && set_contains(s, v)) ++gain;
        }
        if (gain > best_gain) {
          best_gain = gain;
          best_v = v;
        }
      }
      if (best_v < 0) break;
      chosen |= vertex_bit(best_v);
    }
    return chosen;
  }

  int first_unhit(VertexSet chosen) const {
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if ((sets_[i] & chosen) == 0) return static_cast<int>(i);
    }
    return -1;
  }

  // Unhit sets that are pairwise disjoint each need their own element.
  int disjoint_lower_bound(VertexSet chosen) const {
    VertexSet used = 0;
    int count = 0;
    for (VertexSet s : sets_) {
      if ((s & chosen) == 0 && (s & used) == 0) {
        ++count;
        used |= s;
      }
    }
    return count;
  }

  void search(VertexSet chosen, int count) {
    if (++nodes_ > budget_) {
      throw ResourceError("hitting-set search exceeded node budget of " +
                          std::to_string(budget_));
    }
    int idx = first_unhit(chosen);
    if (idx < 0) {
      if (count < best_size_) {
        best_size_ = count;
        best_mask_ = chosen;
      }
      return;
    }
    if (count + disjoint_lower_bound(chosen) >= best_size_) return;
    for (VertexSet cand = sets_[static_cast<std::size_t>(idx)]; cand;) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      search(chosen | vertex_bit(v), count + 1);
    }
  }

  int n_;
  std::vector<VertexSet> sets_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int best_size_ = 0;
  VertexSet best_mask_ = 0;
};

// ---- blossom matching ------------------------------------------------------

// Augmenting-path search with blossom contraction (base[] tracks contracted
// blossoms). O(V^3); ample for the <= 64 vertex instances here.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(n_)) {
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = set_to_vertices(g.adjacency(v));
    match_.assign(static_cast<std::size_t>(n_), -1);
  }

  const std::vector<int>& solve() {
    for (int v = 0; v < n_; ++v) {
      if (match_[static_cast<std::size_t>(v)] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        int pu = parent_[static_cast<std::size_t>(u)];
        int next = match_[static_cast<std::size_t>(pu)];
        match_[static_cast<std::size_t>(u)] = pu;
        match_[static_cast<std::size_t>(pu)] = u;
        u = next;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) const {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    int x = a;
    while (true) {
      x = base_[static_cast<std::size_t>(x)];
      seen[static_cast<std::size_t>(x)] = true;
      if (match_[static_cast<std::size_t>(x)] == -1) break;
      x = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(x)])];
    }
    int y = b;
    while (true) {
      y = base_[static_cast<std::size_t>(y)];
      if (seen[static_cast<std::size_t>(y)]) return y;
      y = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(y)])];
    }
  }

  void mark_path(int v, int b, int child, std::vector<bool>& in_blossom) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      int mv = match_[static_cast<std::size_t>(v)];
      in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
      in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = true;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  int find_path(int root) {
    used_.assign(static_cast<std::size_t>(n_), false);
    parent_.assign(static_cast<std::size_t>(n_), -1);
    base_.resize(static_cast<std::size_t>(n_));
    std::iota(base_.begin(), base_.end(), 0);

    used_[static_cast<std::size_t>(root)] = true;
    std::deque<int> queue = {root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : adj_[static_cast<std::size_t>(v)]) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            match_[static_cast<std::size_t>(v)] == to) {
          continue;
        }
        if (to == root ||
            (match_[static_cast<std::size_t>(to)] != -1 &&
             parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
          // Odd cycle: contract the blossom at the lowest common ancestor.
          int cur_base = lca(v, to);
          std::vector<bool> in_blossom(static_cast<std::size_t>(n_), false);
          mark_path(v, cur_base, to, in_blossom);
          mark_path(to, cur_base, v, in_blossom);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
              base_[static_cast<std::size_t>(i)] = cur_base;
              if (!used_[static_cast<std::size_t>(i)]) {
                used_[static_cast<std::size_t>(i)] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[static_cast<std::size_t>(to)] == -1) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (match_[static_cast<std::size_t>(to)] == -1) return to;
          used_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] = true;
          queue.push_back(match_[static_cast<std::size_t>(to)]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_;
};

// Independent check of the blossom result on small graphs: maximum matching
// by DP over vertex subsets.
int dp_matching_size(const Graph& g) {
  int n = g.order();
  std::vector<signed char> memo(std::size_t{1} << n, -1);
  memo[0] = 0;
  auto rec = [&](auto&& self, VertexSet mask) -> int {
    signed char& slot = memo[static_cast<std::size_t>(mask)];
    if (slot >= 0) return slot;
    int v = first_vertex(mask);
    int best = self(self, mask & ~vertex_bit(v));
    for (VertexSet cands = g.adjacency(v) & mask; cands;) {
      int u = std::countr_zero(cands);
      cands &= cands - 1;
      best = std::max(best, 1 + self(self, mask & ~vertex_bit(v) & ~vertex_bit(u)));
    }
    slot = static_cast<signed char>(best);
    return best;
  };
  return rec(rec, all_vertices(n));
}

// ---- subset-enumeration oracle machinery ----------------------------------

// Visits subsets of [0,n) in increasing cardinality; returns the first one
// satisfying pred. Every predicate used here is satisfied by the full set.
template <typename Pred>
int oracle_search(int n, Pred pred, const char* what) {
  std::uint64_t examined = 0;
  for (int c = 0; c <= n; ++c) {
    if (c == 0) {
      if (++examined > kOracleCap) throw ResourceError(std::string(what) + ": oracle cap exceeded");
      if (pred(VertexSet{0})) return 0;
      continue;
    }
    if (c > 63 || (n > 0 && c > n)) break;
    VertexSet mask = (VertexSet{1} << c) - 1;
    VertexSet limit = n >= 64 ? 0 : VertexSet{1} << n;
    while (limit == 0 || mask < limit) {
      if (++examined > kOracleCap) throw ResourceError(std::string(what) + ": oracle cap exceeded");
      if (pred(mask)) return c;
      // Gosper's hack: next subset of the same cardinality.
      VertexSet low = mask & (~mask + 1);
      VertexSet ripple = mask + low;
      if (ripple == 0) break;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
      if (n < 64 && mask >= (VertexSet{1} << n)) break;
    }
  }
  throw Error(std::string(what) + ": no subset satisfied the predicate");
}

std::vector<VertexSet> closed_neighborhoods(const Graph& g) {
  std::vector<VertexSet> sets(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) sets[static_cast<std::size_t>(v)] = g.closed_neighborhood(v);
  return sets;
}

// Closed neighborhoods in the hypergraph's co-occurrence adjacency, computed
// straight from the hyperedges.
std::vector<VertexSet> hypergraph_closed_neighborhoods(const Hypergraph& h) {
  std::vector<VertexSet> sets(static_cast<std::size_t>(h.order()), 0);
  for (int v = 0; v < h.order(); ++v) sets[static_cast<std::size_t>(v)] = vertex_bit(v);
  for (VertexSet e : h.edges()) {
    for (VertexSet rest = e; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      sets[static_cast<std::size_t>(v)] |= e;
    }
  }
  return sets;
}

InvariantCertificate matching_bnb(const std::vector<VertexSet>& edges, std::uint64_t budget,
                                  const char* what) {
  int m = static_cast<int>(edges.size());
  std::vector<int> best, current;
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, int i, VertexSet used) -> void {
    if (++nodes > budget) {
      throw ResourceError(std::string(what) + " exceeded node budget of " + std::to_string(budget));
    }
    if (static_cast<int>(current.size()) + (m - i) <= static_cast<int>(best.size())) return;
    if (i == m) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if ((edges[static_cast<std::size_t>(i)] & used) == 0) {
      current.push_back(i);
      self(self, i + 1, used | edges[static_cast<std::size_t>(i)]);
      current.pop_back();
    }
    self(self, i + 1, used);
  };
  rec(rec, 0, 0);
  return {static_cast<int>(best.size()), best};
}

}  // namespace

// ---- predicates ------------------------------------------------------------

bool is_dominating_set(const Graph& g, VertexSet d) {
  for (int v = 0; v < g.order(); ++v) {
    if (set_contains(d, v)) continue;
    if ((g.adjacency(v) & d) == 0) return false;
  }
  return true;
}

bool is_dominating_set(const Hypergraph& h, VertexSet d) {
  auto nbhd = hypergraph_closed_neighborhoods(h);
  for (int v = 0; v < h.order(); ++v) {
    if (set_contains(d, v)) continue;
    if (((nbhd[static_cast<std::size_t>(v)] & ~vertex_bit(v)) & d) == 0) return false;
  }
  return true;
}

bool is_vertex_cover(const Graph& g, VertexSet t) {
  for (const Edge& e : g.edges()) {
    if (!set_contains(t, e.first) && !set_contains(t, e.second)) return false;
  }
  return true;
}

bool is_transversal(const Hypergraph& h, VertexSet t) {
  for (VertexSet e : h.edges()) {
    if ((e & t) == 0) return false;
  }
  return true;
}

bool is_matching(const Graph& g, const std::vector<int>& edge_indices) {
  VertexSet used = 0;
  for (int idx : edge_indices) {
    if (idx < 0 || idx >= g.size()) return false;
    VertexSet e = g.edge_set(idx);
    if (e & used) return false;
    used |= e;
  }
  return true;
}

bool is_matching(const Hypergraph& h, const std::vector<int>& edge_indices) {
  VertexSet used = 0;
  for (int idx : edge_indices) {
    if (idx < 0 || idx >= h.size()) return false;
    VertexSet e = h.edges()[static_cast<std::size_t>(idx)];
    if (e & used) return false;
    used |= e;
  }
  return true;
}

// ---- graph solvers ----------------------------------------------------------

InvariantCertificate domination_number_graph(const Graph& g, const SolverLimits& limits) {
  if (g.order() < 1) throw ParameterError("domination requires a non-empty graph");
  HittingSetSolver solver(g.order(), closed_neighborhoods(g), limits.node_budget);
  InvariantCertificate cert = solver.solve();
  if (static_cast<int>(cert.witness.size()) != cert.value ||
      !is_dominating_set(g, vertices_to_set(cert.witness))) {
    certificate_bug("graph domination");
  }
  return cert;
}

InvariantCertificate matching_number_graph(const Graph& g) {
  BlossomMatcher matcher(g);
  const std::vector<int>& mate = matcher.solve();
  std::vector<int> witness;
  for (int v = 0; v < g.order(); ++v) {
    int u = mate[static_cast<std::size_t>(v)];
    if (u > v) {
      Edge e{v, u};
      auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
      witness.push_back(static_cast<int>(it - g.edges().begin()));
    }
  }
  std::sort(witness.begin(), witness.end());
  InvariantCertificate cert{static_cast<int>(witness.size()), witness};
  if (g.order() < 10 && cert.value != dp_matching_size(g)) certificate_bug("blossom vs dp");
  if (!is_matching(g, cert.witness)) certificate_bug("graph matching");
  return cert;
}

InvariantCertificate transversal_number_graph(const Graph& g, const SolverLimits& limits) {
  std::vector<VertexSet> sets;
  sets.reserve(g.edges().size());
  for (int i = 0; i < g.size(); ++i) sets.push_back(g.edge_set(i));
  HittingSetSolver solver(g.order(), sets, limits.node_budget);
  InvariantCertificate cert = solver.solve();
  if (static_cast<int>(cert.witness.size()) != cert.value ||
      !is_vertex_cover(g, vertices_to_set(cert.witness))) {
    certificate_bug("graph transversal");
  }
  return cert;
}

// ---- hypergraph solvers -------------------------------------------------------

InvariantCertificate domination_number_hypergraph(const Hypergraph& h,
                                                  const SolverLimits& limits) {
  validate(h);
  if (h.order() < 1) throw ParameterError("domination requires a non-empty hypergraph");
  std::vector<VertexSet> nbhd = hypergraph_closed_neighborhoods(h);

  // Closed-twin collapse: vertices with identical closed neighborhoods are
  // interchangeable for domination; keep the lowest id of each class.
  std::vector<int> reps;
  for (int v = 0; v < h.order(); ++v) {
    bool is_rep = true;
    for (int u = 0; u < v; ++u) {
      if (nbhd[static_cast<std::size_t>(u)] == nbhd[static_cast<std::size_t>(v)]) {
        is_rep = false;
        break;
      }
    }
    if (is_rep) reps.push_back(v);
  }
  VertexSet rep_mask = vertices_to_set(reps);
  std::vector<int> new_of_old(static_cast<std::size_t>(h.order()), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) new_of_old[static_cast<std::size_t>(reps[i])] = static_cast<int>(i);

  // Reduced closed neighborhoods, renumbered to rep indices.
  std::vector<VertexSet> reduced(reps.size(), 0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (VertexSet s = nbhd[static_cast<std::size_t>(reps[i])] & rep_mask; s;) {
      int v = std::countr_zero(s);
      s &= s - 1;
      reduced[i] |= vertex_bit(new_of_old[static_cast<std::size_t>(v)]);
    }
  }
  HittingSetSolver solver(static_cast<int>(reps.size()), reduced, limits.node_budget);
  InvariantCertificate cert = solver.solve();
  for (int& v : cert.witness) v = reps[static_cast<std::size_t>(v)];
  if (static_cast<int>(cert.witness.size()) != cert.value ||
      !is_dominating_set(h, vertices_to_set(cert.witness))) {
    certificate_bug("hypergraph domination");
  }
  return cert;
}

InvariantCertificate matching_number_hypergraph(const Hypergraph& h, const SolverLimits& limits) {
  validate(h);
  InvariantCertificate cert = matching_bnb(h.edges(), limits.node_budget, "hypergraph matching");
  if (!is_matching(h, cert.witness)) certificate_bug("hypergraph matching");
  return cert;
}

InvariantCertificate transversal_number_hypergraph(const Hypergraph& h,
                                                   const SolverLimits& limits) {
  validate(h);
  HittingSetSolver solver(h.order(), h.edges(), limits.node_budget);
  InvariantCertificate cert = solver.solve();
  if (static_cast<int>(cert.witness.size()) != cert.value ||
      !is_transversal(h, vertices_to_set(cert.witness))) {
    certificate_bug("hypergraph transversal");
  }
  return cert;
}

// ---- oracles ---------------------------------------------------------------

int oracle_domination(const Graph& g) {
  return oracle_search(g.order(), [&](VertexSet d) { return is_dominating_set(g, d); },
                       "oracle_domination(graph)");
}

int oracle_domination(const Hypergraph& h) {
  validate(h);
  return oracle_search(h.order(), [&](VertexSet d) { return is_dominating_set(h, d); },
                       "oracle_domination(hypergraph)");
}

namespace {

// Matchings are downward closed, so the largest c for which some c-subset of
// edges is pairwise disjoint can be found by increasing cardinality: stop at
// the first c with no disjoint c-subset.
int oracle_matching_impl(const std::vector<VertexSet>& masks) {
  int m = static_cast<int>(masks.size());
  if (m > 63) throw ResourceError("oracle_matching: edge-subset space exceeds cap");
  std::uint64_t examined = 0;
  int best = 0;
  for (int c = 1; c <= m; ++c) {
    bool found = false;
    std::uint64_t sub = (std::uint64_t{1} << c) - 1;
    std::uint64_t limit = std::uint64_t{1} << m;
    while (sub < limit) {
      if (++examined > kOracleCap) throw ResourceError("oracle_matching: oracle cap exceeded");
      VertexSet used = 0;
      bool ok = true;
      for (std::uint64_t s = sub; s;) {
        int i = std::countr_zero(s);
        s &= s - 1;
        if (masks[static_cast<std::size_t>(i)] & used) {
          ok = false;
          break;
        }
        used |= masks[static_cast<std::size_t>(i)];
      }
      if (ok) {
        found = true;
        break;
      }
      std::uint64_t low = sub & (~sub + 1);
      std::uint64_t ripple = sub + low;
      if (ripple >= limit || ripple == 0) break;
      sub = ripple | (((sub ^ ripple) >> 2) / low);
    }
    if (!found) break;
    best = c;
  }
  return best;
}

}  // namespace

int oracle_matching(const Graph& g) {
  std::vector<VertexSet> masks;
  masks.reserve(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) masks.push_back(g.edge_set(i));
  return oracle_matching_impl(masks);
}

int oracle_matching(const Hypergraph& h) {
  validate(h);
  return oracle_matching_impl(h.edges());
}

int oracle_transversal(const Graph& g) {
  return oracle_search(g.order(), [&](VertexSet t) { return is_vertex_cover(g, t); },
                       "oracle_transversal(graph)");
}

int oracle_transversal(const Hypergraph& h) {
  validate(h);
  return oracle_search(h.order(), [&](VertexSet t) { return is_transversal(h, t); },
                       "oracle_transversal(hypergraph)");
}

}  // namespace powerhg
