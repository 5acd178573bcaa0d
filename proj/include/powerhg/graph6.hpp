#pragma once

#include <string>
#include <string_view>

#include "powerhg/graph.hpp"

namespace powerhg {

// Standard header-less graph6 codec for graphs of order 0..62 (single-byte
// order field). One graph per line; the line must contain nothing but the
// code itself.

Graph parse_graph6(std::string_view text);

std::string write_graph6(const Graph& g);

}  // namespace powerhg
