#include <doctest.h>

#include <random>

#include "powerhg/constructions.hpp"
#include "powerhg/enumerate.hpp"
#include "powerhg/invariants.hpp"

using namespace powerhg;

namespace {

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);      // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);            // spokes
  }
  return Graph(10, std::move(edges));
}

void check_certificate(const Graph& g, const InvariantCertificate& c, char which) {
  CHECK(static_cast<int>(c.witness.size()) == c.value);
  VertexSet mask = vertices_to_set(c.witness);
  if (which == 'g') CHECK(is_dominating_set(g, mask));
  if (which == 't') CHECK(is_vertex_cover(g, mask));
  if (which == 'n') CHECK(is_matching(g, c.witness));
}

}  // namespace

TEST_CASE("domination examples") {
  CHECK(domination_number_graph(complete(2)).value == 1);
  for (int n = 2; n <= 5; ++n) CHECK(domination_number_graph(complete_bipartite(2, n)).value == 2);
  CHECK(domination_number_graph(cycle(7)).value == 3);
  CHECK(oracle_domination(cycle(7)) == 3);
  CHECK(oracle_domination(cycle(4)) == 2);
}

TEST_CASE("matching examples") {
  CHECK(matching_number_graph(complete(2)).value == 1);
  CHECK(oracle_matching(complete(4)) == 2);
  CHECK(matching_number_graph(petersen()).value == 5);
  CHECK(oracle_matching(petersen()) == 5);
  // Wedge formulas, at least one cycle odd (Example 1's hypothesis);
  // even-even pairs lose one edge to the shared vertex.
  for (int p = 3; p <= 8; ++p) {
    for (int q = 3; q <= 8; ++q) {
      int nu = matching_number_graph(wedge_cycles(p, q)).value;
      if (p % 2 == 1 || q % 2 == 1) {
        CHECK(nu == p / 2 + q / 2);
      } else {
        CHECK(nu == p / 2 + q / 2 - 1);
      }
    }
  }
}

TEST_CASE("transversal examples") {
  CHECK(transversal_number_graph(complete(2)).value == 1);
  for (int p = 3; p <= 8; ++p) {
    for (int q = 3; q <= 8; ++q) {
      CHECK(transversal_number_graph(wedge_cycles(p, q)).value ==
            (p + 1) / 2 + (q + 1) / 2 - 1);
    }
  }
  // Koenig: bipartite graphs have tau = nu.
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected_graphs(
             n, [](const Graph& h) { return is_bipartite(h).has_value(); })) {
      CHECK(transversal_number_graph(g).value == matching_number_graph(g).value);
    }
  }
}

TEST_CASE("blossom agrees with the hypergraph search beyond the DP range") {
  // The blossom matcher self-checks against the bitmask DP below order 10;
  // cross-check larger instances against the independent edge-subset search.
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 10 + static_cast<int>(rng() % 5);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 100 < 22) edges.emplace_back(i, j);
      }
    }
    if (edges.size() > 26) edges.resize(26);
    Graph g(n, edges);
    std::vector<VertexSet> masks;
    for (int i = 0; i < g.size(); ++i) masks.push_back(g.edge_set(i));
    Hypergraph as_hyper(n, masks);
    CHECK(matching_number_graph(g).value == matching_number_hypergraph(as_hyper).value);
  }
}

TEST_CASE("hypergraph invariants on blow-ups") {
  // gamma
  Hypergraph lone(3, {vertices_to_set({0, 1, 2})});
  CHECK(domination_number_hypergraph(lone).value == 1);
  CHECK(transversal_number_hypergraph(lone).value == 1);
  CHECK(domination_number_hypergraph(blow_up(wedge_cycles(3, 3), 3, 1).hypergraph).value == 3);
  CHECK(domination_number_hypergraph(blow_up(wedge_cycles(4, 3), 3, 1).hypergraph).value == 3);
  // nu
  Hypergraph two(4, {vertices_to_set({0, 1}), vertices_to_set({2, 3})});
  CHECK(matching_number_hypergraph(two).value == 2);
  CHECK(matching_number_hypergraph(blow_up(cycle(5), 3, 1).hypergraph).value == 2);
  CHECK(matching_number_hypergraph(blow_up(complete_bipartite(2, 3), 4, 2).hypergraph).value == 2);
  // tau
  Hypergraph wedge33 = blow_up(wedge_cycles(3, 3), 3, 1).hypergraph;
  CHECK(transversal_number_hypergraph(wedge33).value ==
        transversal_number_graph(wedge_cycles(3, 3)).value);
}

TEST_CASE("tau of a blow-up equals tau of the base (order <= 5 spot corpus)") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      int tau_g = transversal_number_graph(g).value;
      for (auto [k, s] : {std::pair{3, 1}, std::pair{4, 1}, std::pair{4, 2}, std::pair{5, 2}}) {
        CHECK(transversal_number_hypergraph(blow_up(g, k, s).hypergraph).value == tau_g);
      }
    }
  }
}

TEST_CASE("hypergraph domination equals domination of the primal graph") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      for (auto [k, s] : {std::pair{3, 1}, std::pair{4, 2}}) {
        Hypergraph h = blow_up(g, k, s).hypergraph;
        // Twin-reduced route vs. the plain graph solver on the full primal.
        CHECK(domination_number_hypergraph(h).value ==
              domination_number_graph(primal_graph(h)).value);
      }
    }
  }
}

TEST_CASE("solvers match oracles with valid certificates, order <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      auto gamma = domination_number_graph(g);
      auto nu = matching_number_graph(g);
      auto tau = transversal_number_graph(g);
      check_certificate(g, gamma, 'g');
      check_certificate(g, nu, 'n');
      check_certificate(g, tau, 't');
      CHECK(gamma.value == oracle_domination(g));
      CHECK(nu.value == oracle_matching(g));
      CHECK(tau.value == oracle_transversal(g));
      // Any vertex cover dominates when there are no isolated vertices.
      if (n >= 2) CHECK(gamma.value <= tau.value);
    }
  }
}

TEST_CASE("removing an edge changes nu by at most one, order <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      int nu = matching_number_graph(g).value;
      for (int drop = 0; drop < g.size(); ++drop) {
        std::vector<Edge> edges;
        for (int i = 0; i < g.size(); ++i) {
          if (i != drop) edges.push_back(g.edges()[static_cast<std::size_t>(i)]);
        }
        int nu2 = matching_number_graph(Graph(n, std::move(edges))).value;
        CHECK(nu2 >= nu - 1);
        CHECK(nu2 <= nu);
      }
    }
  }
}

TEST_CASE("deterministic certificates") {
  Graph g = wedge_cycles(5, 4);
  auto a = domination_number_graph(g);
  auto b = domination_number_graph(g);
  CHECK(a.witness == b.witness);
  auto ma = matching_number_graph(g);
  auto mb = matching_number_graph(g);
  CHECK(ma.witness == mb.witness);
}

TEST_CASE("node budget turns into a resource error, never a wrong answer") {
  SolverLimits tiny;
  tiny.node_budget = 2;
  CHECK_THROWS_AS(domination_number_graph(complete_bipartite(3, 4), tiny), ResourceError);
  CHECK_THROWS_AS(transversal_number_graph(petersen(), tiny), ResourceError);
}
