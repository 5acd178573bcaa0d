#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "powerhg/enumerate.hpp"
#include "powerhg/families.hpp"
#include "powerhg/graph6.hpp"

using namespace powerhg;

namespace {

const Catalog& shared_catalog() {
  static Catalog catalog = [] {
    const char* env = std::getenv("POWERHG_CATALOG");
    std::string path = env ? env : POWERHG_DEFAULT_CATALOG;
    return load_catalog_file(path);
  }();
  return catalog;
}

}  // namespace

TEST_CASE("catalog loads nine validated entries") {
  const Catalog& cat = shared_catalog();
  REQUIRE(cat.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(cat[i].label == static_cast<char>('a' + i));
    CHECK(is_connected(cat[i].graph));
    CHECK(!is_bipartite(cat[i].graph));
    CHECK(min_degree(cat[i].graph) >= 2);
  }
}

TEST_CASE("catalog loader rejects bad files") {
  // Wrong count.
  std::stringstream two("a\tBw\nb\tDLo\n");
  CHECK_THROWS_AS(load_catalog(two), ConfigError);
  // A bipartite entry violates the invariants.
  std::stringstream bip("a\tF@Ue?\nb\tF@pTG\nc\tFHQ[o\nd\tFKCmW\ne\tFK_yw\nf\tBw\ng\tDLo\nh\tDLs\ni\tC~\n");
  CHECK_THROWS_AS(load_catalog(bip), ConfigError);
  // gamma != nu: C9 is non-bipartite with delta = 2 but gamma=3 < nu=4.
  std::string c9 = write_graph6(cycle(9));
  std::stringstream off("a\tF@Ue?\nb\tF@pTG\nc\tFHQ[o\nd\tFKCmW\ne\tFK_yw\nf\tBw\ng\tDLo\nh\tDLs\ni\t" +
                        c9 + "\n");
  CHECK_THROWS_AS(load_catalog(off), ConfigError);
  // Malformed line.
  std::stringstream bad("a Bw\n");
  CHECK_THROWS_AS(load_catalog(bad), ConfigError);
}

TEST_CASE("Koenig-Egervary") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(
             n, [](const Graph& h) { return is_bipartite(h).has_value(); })) {
      CHECK(is_konig_egervary(g));
    }
  }
  CHECK(is_konig_egervary(wedge_cycles(4, 3)));
  CHECK_FALSE(is_konig_egervary(cycle(5)));  // tau = 3, nu = 2
}

TEST_CASE("G1 membership") {
  const Catalog* cat = &shared_catalog();
  CHECK(is_in_g1(complete(2), cat).member);
  CHECK(is_in_g1(corona(cycle(3)), cat).member);
  CHECK(is_in_g1(path(3), cat).member);  // generalized corona of order 3
  G1Result k23 = is_in_g1(complete_bipartite(2, 3), cat);
  CHECK_FALSE(k23.member);
  CHECK_FALSE(k23.reasons.empty());
  CHECK_THROWS_AS(is_in_g1(Graph(4, {{0, 1}, {2, 3}}), cat), ParameterError);

  // A pendant triangle: the component reaches clause iii through catalog
  // entry C3 and needs the catalog to decide.
  Graph tri_tail(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(is_in_g1(tri_tail, cat).member);
  CHECK_THROWS_AS(is_in_g1(tri_tail, nullptr), ConfigError);
}

TEST_CASE("G_{>=2} membership") {
  const Catalog* cat = &shared_catalog();
  CHECK(is_in_g_ge2(cycle(7), cat));
  // gamma(C5) = nu(C5) = 2, so C5 belongs (resolved by the oracle; it is
  // catalog entry g).
  CHECK(oracle_domination(cycle(5)) == 2);
  CHECK(oracle_matching(cycle(5)) == 2);
  CHECK(is_in_g_ge2(cycle(5), cat));
  CHECK_FALSE(is_in_g_ge2(complete_bipartite(2, 3), cat));  // bipartite
  CHECK_FALSE(is_in_g_ge2(cycle(9), cat));                  // gamma=3 < nu=4
  CHECK_FALSE(is_in_g_ge2(complete(4), cat));               // gamma=1 < nu=2
}

TEST_CASE("bipartite pair condition") {
  for (int n = 2; n <= 5; ++n) CHECK(satisfies_lemma6(complete_bipartite(2, n)));
  CHECK(satisfies_lemma6(cycle(4)));
  CHECK_FALSE(satisfies_lemma6(cycle(6)));  // gamma = 2 < 3 = |X|
  CHECK(oracle_domination(cycle(6)) == 2);
  CHECK_FALSE(satisfies_lemma6(complete_bipartite(3, 3)));  // gamma = 2 < 3
  CHECK_THROWS_AS(satisfies_lemma6(cycle(5)), ParameterError);
  CHECK_THROWS_AS(satisfies_lemma6(path(4)), ParameterError);  // delta = 1
}

TEST_CASE("family partition matches gamma = nu on the order <= 7 corpus") {
  const Catalog* cat = &shared_catalog();
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      FamilyVerdict v = family_verdict(g, cat);  // also asserts internally
      CHECK(v.gamma_equals_nu == (v.in_g1 || v.in_g_ge2 || v.satisfies_lemma6));
    }
  }
}

TEST_CASE("blow-up family classification") {
  const Catalog* cat = &shared_catalog();
  auto c4 = classify_hypergraph_family(blow_up(cycle(4), 3, 1), cat);
  CHECK(c4.in_h1);
  CHECK(c4.in_ke1);

  auto w43 = classify_hypergraph_family(blow_up(wedge_cycles(4, 3), 3, 1), cat);
  CHECK_FALSE(w43.in_h1);
  CHECK(w43.in_ke1);

  auto c5 = classify_hypergraph_family(blow_up(cycle(5), 3, 1), cat);
  CHECK_FALSE(c5.in_h1);
  CHECK_FALSE(c5.in_ke1);
}
