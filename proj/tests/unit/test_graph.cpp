#include <doctest.h>

#include "powerhg/constructions.hpp"
#include "powerhg/enumerate.hpp"
#include "powerhg/graph.hpp"

using namespace powerhg;

TEST_CASE("graph construction rejects broken edge lists") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), ValidationError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ValidationError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(Graph(65, {}), CapacityError);
  // Edge normalization: {2,0} and {0,2} are the same edge.
  Graph g(3, {{2, 0}, {1, 2}});
  CHECK(g.has_edge(0, 2));
  CHECK(g.edges()[0] == Edge{0, 2});
}

TEST_CASE("connectivity") {
  CHECK(is_connected(complete(2)));
  CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(wedge_cycles(3, 4)));
}

TEST_CASE("bipartiteness with normalized sides") {
  auto c4 = is_bipartite(cycle(4));
  REQUIRE(c4);
  CHECK(set_size(c4->side_x) == 2);
  CHECK(set_size(c4->side_y) == 2);
  CHECK((c4->side_x & c4->side_y) == 0);
  CHECK((c4->side_x | c4->side_y) == cycle(4).vertices());

  CHECK_FALSE(is_bipartite(cycle(5)));
  CHECK_FALSE(is_bipartite(wedge_cycles(4, 3)));

  auto k23 = is_bipartite(complete_bipartite(2, 3));
  REQUIRE(k23);
  CHECK(set_size(k23->side_x) == 2);
}

TEST_CASE("bipartite agrees with a 2-coloring brute force up to order 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      bool colorable = false;
      for (VertexSet side = 0; side < (VertexSet{1} << n) && !colorable; ++side) {
        bool ok = true;
        for (const Edge& e : g.edges()) {
          if (set_contains(side, e.first) == set_contains(side, e.second)) {
            ok = false;
            break;
          }
        }
        colorable = ok;
      }
      CHECK(is_bipartite(g).has_value() == colorable);
    }
  }
}

TEST_CASE("degrees, ends and stems") {
  CHECK(min_degree(complete(2)) == 1);
  CHECK(min_degree(cycle(7)) == 2);
  CHECK(min_degree(complete_bipartite(2, 3)) == 2);

  Graph p3 = path(3);
  CHECK(end_vertices(p3) == (vertex_bit(0) | vertex_bit(2)));
  CHECK(stems(p3) == vertex_bit(1));

  CHECK(end_vertices(cycle(4)) == 0);
  CHECK(stems(cycle(4)) == 0);

  Graph cor = corona(cycle(3));
  CHECK(set_size(end_vertices(cor)) == 3);
  CHECK(set_size(stems(cor)) == 3);
}

TEST_CASE("components and induced subgraphs") {
  Graph g(5, {{0, 1}, {2, 3}});
  auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == (vertex_bit(0) | vertex_bit(1)));
  CHECK(comps[2] == vertex_bit(4));

  std::vector<int> old_ids;
  Graph sub = induced_subgraph(cycle(5), vertex_bit(0) | vertex_bit(1) | vertex_bit(2), &old_ids);
  CHECK(sub.order() == 3);
  CHECK(sub.size() == 2);  // path 0-1-2
  CHECK(old_ids == std::vector<int>{0, 1, 2});

  Graph relabeled = permuted(cycle(4), {1, 2, 3, 0});
  CHECK(relabeled.size() == 4);
  CHECK(relabeled.has_edge(1, 2));
}
