#include <doctest.h>

#include <algorithm>
#include <random>

#include "powerhg/constructions.hpp"
#include "powerhg/graph6.hpp"
#include "powerhg/hypergraph.hpp"

using namespace powerhg;

namespace {

Hypergraph make(int order, std::vector<std::vector<int>> edges) {
  std::vector<VertexSet> masks;
  for (const auto& e : edges) masks.push_back(vertices_to_set(e));
  return Hypergraph(order, std::move(masks));
}

}  // namespace

TEST_CASE("validation distinguishes the failure modes") {
  CHECK_NOTHROW(validate(make(3, {{0, 1, 2}}), 3));

  try {
    validate(make(3, {{}}));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::kEmptyEdge);
  }
  try {
    validate(make(3, {{0, 5}}));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::kVertexOutOfRange);
  }
  try {
    validate(make(3, {{0, 1}, {1, 0}}));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::kDuplicateEdge);
  }
  try {
    validate(make(3, {{0, 1}}), 3);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::kWrongEdgeSize);
  }
  // Blow-ups are k-uniform by construction.
  CHECK_NOTHROW(validate(blow_up(cycle(3), 4, 1).hypergraph, 4));
}

TEST_CASE("vertex degrees on blow-ups") {
  Hypergraph lone = make(3, {{0, 1, 2}});
  CHECK(vertex_degree(lone, 0) == 1);
  CHECK_THROWS_AS(vertex_degree(lone, 3), ParameterError);

  BlowupHypergraph b = blow_up(cycle(3), 3, 1);
  // Original vertices keep their base degree, added vertices have degree 1.
  for (int v = 0; v < 3; ++v) CHECK(vertex_degree(b.hypergraph, v) == 2);
  for (int v = 3; v < b.hypergraph.order(); ++v) CHECK(vertex_degree(b.hypergraph, v) == 1);
}

TEST_CASE("primal graph examples") {
  CHECK(primal_graph(make(3, {{0, 1, 2}})) == complete(3));
  CHECK(primal_graph(make(4, {{0, 1}, {2, 3}})) == Graph(4, {{0, 1}, {2, 3}}));
  CHECK(primal_graph(blow_up(complete(2), 4, 1).hypergraph) == complete(4));
}

TEST_CASE("primal adjacency equals pairwise co-occurrence on random hypergraphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int order = 2 + static_cast<int>(rng() % 9);
    int m = 1 + static_cast<int>(rng() % 6);
    std::vector<VertexSet> edges;
    for (int i = 0; i < m; ++i) {
      VertexSet e = 0;
      while (e == 0) e = rng() & all_vertices(order);
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    Hypergraph h(order, edges);
    Graph primal = primal_graph(h);
    for (int u = 0; u < order; ++u) {
      for (int v = u + 1; v < order; ++v) {
        bool together = false;
        for (VertexSet e : edges) {
          if (set_contains(e, u) && set_contains(e, v)) together = true;
        }
        CHECK(primal.has_edge(u, v) == together);
      }
    }
  }
}

TEST_CASE("hypergraph text format round trip and errors") {
  BlowupHypergraph b = blow_up(wedge_cycles(3, 3), 3, 1);
  std::string text = write_hypergraph_text(b.hypergraph, 3);
  int k = 0;
  Hypergraph parsed = parse_hypergraph_text(text, &k);
  CHECK(k == 3);
  CHECK(parsed.order() == b.hypergraph.order());
  CHECK(parsed.edges() == b.hypergraph.edges());

  CHECK_THROWS_AS(parse_hypergraph_text(""), ParseError);
  CHECK_THROWS_AS(parse_hypergraph_text("3\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph_text("3 3\n0 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_hypergraph_text("3 3\n0 x 2\n"), ParseError);
}
