#include "powerhg/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace powerhg {

Hypergraph::Hypergraph(int order, std::vector<VertexSet> edges)
    : order_(order), edges_(std::move(edges)) {
  if (order < 0 || order > kMaxVertices) {
    throw CapacityError("hypergraph order " + std::to_string(order) +
                        " outside supported range [0, 64]");
  }
}

void validate(const Hypergraph& h, std::optional<int> uniform_k) {
  VertexSet range = h.vertices();
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    VertexSet e = h.edges()[i];
    if (e == 0) {
      throw ValidationError(ValidationError::Kind::kEmptyEdge,
                            "hyperedge " + std::to_string(i) + " is empty");
    }
    if (e & ~range) {
      throw ValidationError(ValidationError::Kind::kVertexOutOfRange,
                            "hyperedge " + std::to_string(i) + " contains vertex " +
                                std::to_string(first_vertex(e & ~range)) +
                                " outside order " + std::to_string(h.order()));
    }
    if (uniform_k && set_size(e) != *uniform_k) {
      throw ValidationError(ValidationError::Kind::kWrongEdgeSize,
                            "hyperedge " + std::to_string(i) + " has " +
                                std::to_string(set_size(e)) + " vertices, expected " +
                                std::to_string(*uniform_k));
    }
  }
  std::vector<VertexSet> sorted = h.edges();
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw ValidationError(ValidationError::Kind::kDuplicateEdge,
                          "duplicate hyperedge {" + [&] {
                            std::string s;
                            for (int v : set_to_vertices(*dup)) {
                              if (!s.empty()) s += ",";
                              s += std::to_string(v);
                            }
                            return s;
                          }() + "}");
  }
}

int vertex_degree(const Hypergraph& h, int v) {
  if (v < 0 || v >= h.order()) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(h.order()));
  }
  int d = 0;
  for (VertexSet e : h.edges()) {
    if (set_contains(e, v)) ++d;
  }
  return d;
}

Graph primal_graph(const Hypergraph& h) {
  validate(h);
  std::vector<VertexSet> adj(static_cast<std::size_t>(h.order()), 0);
  for (VertexSet e : h.edges()) {
    for (VertexSet rest = e; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      adj[static_cast<std::size_t>(v)] |= e & ~vertex_bit(v);
    }
  }
  std::vector<Edge> edges;
  for (int v = 0; v < h.order(); ++v) {
    for (VertexSet higher = adj[static_cast<std::size_t>(v)] & ~(vertex_bit(v + 1) - 1); higher;) {
      int u = std::countr_zero(higher);
      higher &= higher - 1;
      edges.emplace_back(v, u);
    }
  }
  return Graph(h.order(), std::move(edges));
}

std::string write_hypergraph_text(const Hypergraph& h, int k) {
  std::string out = std::to_string(h.order()) + " " + std::to_string(k) + "\n";
  for (VertexSet e : h.edges()) {
    bool first = true;
    for (int v : set_to_vertices(e)) {
      if (!first) out += " ";
      out += std::to_string(v);
      first = false;
    }
    out += "\n";
  }
  return out;
}

Hypergraph parse_hypergraph_text(std::string_view text, int* k_out) {
  std::size_t pos = 0;
  auto read_int = [&](bool* eol) -> std::optional<int> {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
    if (pos >= text.size() || text[pos] == '\n') {
      if (eol) *eol = true;
      if (pos < text.size()) ++pos;
      return std::nullopt;
    }
    if (eol) *eol = false;
    int value = 0;
    auto [next, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("expected integer in hypergraph text", pos);
    pos = static_cast<std::size_t>(next - text.data());
    return value;
  };

  bool eol = false;
  auto order = read_int(&eol);
  auto k = read_int(&eol);
  if (!order || !k) throw ParseError("hypergraph header must be \"order k\"", 0);
  if (!eol) {
    auto extra = read_int(&eol);
    if (extra) throw ParseError("trailing tokens after hypergraph header", pos);
  }

  std::vector<VertexSet> edges;
  VertexSet current = 0;
  bool any = false;
  while (pos <= text.size()) {
    if (pos == text.size()) {
      if (any) edges.push_back(current);
      break;
    }
    bool line_end = false;
    auto v = read_int(&line_end);
    if (v) {
      if (*v < 0 || *v >= kMaxVertices) {
        throw ParseError("vertex id " + std::to_string(*v) + " outside bitset capacity", pos);
      }
      current |= vertex_bit(*v);
      any = true;
    } else if (line_end) {
      if (any) edges.push_back(current);
      current = 0;
      any = false;
    }
  }
  Hypergraph h(*order, std::move(edges));
  validate(h, *k);
  if (k_out) *k_out = *k;
  return h;
}

}  // namespace powerhg
