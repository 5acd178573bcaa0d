#pragma once

#include <functional>
#include <vector>

#include "powerhg/graph.hpp"

namespace powerhg {

inline constexpr int kMaxEnumerationOrder = 9;

using GraphFilter = std::function<bool(const Graph&)>;
using GraphSink = std::function<void(const Graph&)>;

// Streams exactly one representative per isomorphism class of connected
// simple graphs of the given order, canonically labeled, in a deterministic
// order (edge count ascending, canonical code ascending). Generation works by
// incremental edge augmentation over the full graph lattice with
// canonical-form dedup per level. Supported for 1 <= order <= 9.
void for_each_connected_graph(int order, const GraphSink& sink, const GraphFilter& filter = {});

// Convenience collector for the stream above.
std::vector<Graph> enumerate_connected_graphs(int order, const GraphFilter& filter = {});

// All connected graphs of order 1..max_order (or 2..max_order when
// skip_trivial is set, which blow-up corpora need since K1 has an isolated
// vertex), optionally capped by edge count.
std::vector<Graph> connected_graphs_upto(int max_order, int max_edges = -1,
                                         bool skip_trivial = false);

}  // namespace powerhg
