#include <doctest.h>

#include "powerhg/canon.hpp"
#include "powerhg/constructions.hpp"
#include "powerhg/expr.hpp"

using namespace powerhg;

TEST_CASE("construction expressions") {
  CHECK(parse_construction("cycle(5)") == cycle(5));
  CHECK(parse_construction("wedge_cycles(4,3)") == wedge_cycles(4, 3));
  CHECK(parse_construction(" complete_bipartite( 2 , 3 ) ") == complete_bipartite(2, 3));
  CHECK(parse_construction("corona(cycle(3))") == corona(cycle(3)));
  CHECK(parse_construction("generalized_corona(complete(2),2,1)") ==
        generalized_corona(complete(2), {2, 1}));
}

TEST_CASE("expression errors carry byte offsets") {
  CHECK_THROWS_AS(parse_construction("cycle"), ParseError);
  CHECK_THROWS_AS(parse_construction("cycle(2)"), ParseError);   // parameter violation
  CHECK_THROWS_AS(parse_construction("cycle(3,4)"), ParseError); // arity
  CHECK_THROWS_AS(parse_construction("frob(3)"), ParseError);    // unknown name
  CHECK_THROWS_AS(parse_construction("cycle(3))"), ParseError);  // trailing input
  CHECK_THROWS_AS(parse_construction("corona(3)"), ParseError);  // needs a graph

  try {
    parse_construction("cycle(3))");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 8);
  }
}
