#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "powerhg/graph.hpp"

namespace powerhg {

// Design bound for the refinement + backtracking canonicalizer.
inline constexpr int kCanonMaxOrder = 12;

namespace detail {

// Upper-triangle adjacency bits of the canonically relabeled graph, packed
// most-significant-first so lexicographic comparison of words matches
// lexicographic comparison of the bit stream. Pair (i,j), i<j, occupies
// stream position j*(j-1)/2 + i.
struct CanonKey {
  std::uint64_t w0 = 0;
  std::uint64_t w1 = 0;

  friend bool operator==(const CanonKey&, const CanonKey&) = default;
  friend auto operator<=>(const CanonKey& a, const CanonKey& b) {
    if (a.w0 != b.w0) return a.w0 <=> b.w0;
    return a.w1 <=> b.w1;
  }
};

// Core canonicalization on raw adjacency masks. If perm_out is non-null it
// receives the canonical relabeling (perm_out[old] = new), length n.
CanonKey canonical_key(int n, const VertexSet* adj, int* perm_out = nullptr);

}  // namespace detail

// Canonical label string: the graph6 encoding of the canonically relabeled
// graph. Two graphs yield equal strings iff they are isomorphic. Supported
// for order <= 12.
std::string canonical_form(const Graph& g);

// Canonically relabeled copy of g.
Graph canonical_copy(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace powerhg
