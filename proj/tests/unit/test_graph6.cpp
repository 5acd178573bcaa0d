#include <doctest.h>

#include "powerhg/constructions.hpp"
#include "powerhg/enumerate.hpp"
#include "powerhg/graph6.hpp"

using namespace powerhg;

TEST_CASE("graph6 writes the forced small codes") {
  CHECK(write_graph6(complete(2)) == "A_");
  // K4: header 'C', all six upper-triangle bits set -> 63+63 = '~'.
  CHECK(write_graph6(complete(4)) == "C~");
  // Single vertex: order byte only.
  CHECK(write_graph6(Graph(1, {})) == "@");
}

TEST_CASE("graph6 parses the forced small codes") {
  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(k2.has_edge(0, 1));

  Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);

  // "D?{" is the 5-vertex star K_{1,4}: column bits put all four edges at
  // vertex 4.
  Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.size() == 4);
  CHECK(star.degree(4) == 4);

  // Trailing newline from line-oriented readers is tolerated.
  CHECK(parse_graph6("A_\n") == k2);
}

TEST_CASE("graph6 parse errors name the byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("\x01_"), ParseError);  // malformed header
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);     // truncated bit vector
  CHECK_THROWS_AS(parse_graph6("A_g"), ParseError);    // trailing garbage

  try {
    parse_graph6("A_g");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_graph6("C\x02");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  // Multi-byte order field is a capacity limitation, not a syntax error.
  CHECK_THROWS_AS(parse_graph6("~??"), CapacityError);
  CHECK_THROWS_AS(write_graph6(Graph(63, {})), CapacityError);
}

TEST_CASE("graph6 round trip over the order<=7 corpus") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      CHECK(parse_graph6(write_graph6(g)) == g);
    }
  }
}
