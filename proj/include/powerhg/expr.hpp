#pragma once

#include <string_view>

#include "powerhg/graph.hpp"

namespace powerhg {

// Tiny recursive-descent grammar for inline constructions:
//
//   expr  := name '(' args? ')'
//   args  := arg (',' arg)*
//   arg   := integer | expr
//
// Known names: cycle(p), path(p), complete(n), complete_bipartite(a,b),
// wedge_cycles(p,q), corona(expr), generalized_corona(expr, c0, c1, ...).
// Rejected expressions raise ParseError carrying the byte offset, which the
// CLI turns into a caret-pointed diagnostic.
Graph parse_construction(std::string_view text);

}  // namespace powerhg
