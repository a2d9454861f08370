#include <doctest.h>

#include <string>

#include "corpus.hpp"
#include "sepmc/generators.hpp"
#include "sepmc/io.hpp"

using namespace sepmc;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("edge list parsing") {
  CHECK(parse_edge_list("2 1\n0 1\n") == Graph(2, {{0, 1}}));
  CHECK(parse_edge_list("3 0\n") == edgeless(3));
  CHECK(parse_edge_list("# comment\n\n4 2\n0 1\n\n# mid\n2 3\n") ==
        Graph(4, {{0, 1}, {2, 3}}));
  CHECK(parse_edge_list("0 0\n") == Graph(0, {}));
}

TEST_CASE("edge list errors carry line numbers") {
  CHECK(parse_error_line("") == 0);                     // missing header
  CHECK(parse_error_line("junk\n") == 1);               // bad header
  CHECK(parse_error_line("2\n") == 1);                  // header needs two fields
  CHECK(parse_error_line("-1 0\n") == 1);               // negative count
  CHECK(parse_error_line("2 1\n") == 0);                // fewer edges than promised
  CHECK(parse_error_line("2 1\n0 1\n0 1\n") == 3);      // more edges than promised
  CHECK(parse_error_line("3 2\n0 1\n0 1\n") == 3);      // duplicate edge
  CHECK(parse_error_line("3 1\n1 1\n") == 2);           // self-loop
  CHECK(parse_error_line("3 1\n1 0\n") == 2);           // order violates u < v
  CHECK(parse_error_line("3 1\n0 3\n") == 2);           // id out of range
  CHECK(parse_error_line("3 1\n0 x\n") == 2);           // not an integer
  CHECK(parse_error_line("# only comments\n") == 0);    // no header at all

  try {
    parse_edge_list("3 1\n1 1\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") == 0);
  }
}

TEST_CASE("edge list round trip") {
  for (const Graph& g : {prism(3), path(7), cycle(5), complete(4), edgeless(6),
                         gnp(9, 0.4, 5), Graph(0, {}), Graph(1, {})}) {
    CHECK(parse_edge_list(to_edge_list(g)) == g);
  }
  CHECK(to_edge_list(Graph(2, {{0, 1}})) == "2 1\n0 1\n");
}

TEST_CASE("graph6 encoding matches the published format") {
  // reference strings from an independent encoder
  CHECK(to_graph6(path(4)) == "Ch");
  CHECK(to_graph6(cycle(5)) == "Dhc");
  CHECK(to_graph6(complete(2)) == "A_");
  CHECK(to_graph6(edgeless(2)) == "A?");
  CHECK(to_graph6(complete(5)) == "D~{");
  CHECK(to_graph6(prism(3)) == "E{Sw");
  CHECK(to_graph6(edgeless(1)) == "@");
  CHECK(to_graph6(edgeless(0)) == "?");

  // n = 70 exercises the 4-byte size tier
  std::string p70 = to_graph6(path(70));
  CHECK(p70.size() == 407);
  CHECK(p70.substr(0, 12) == "~?@EhCGGC@?G");
  CHECK(parse_graph6(p70) == path(70));
}

TEST_CASE("graph6 decoding") {
  CHECK(parse_graph6("Ch") == path(4));
  CHECK(parse_graph6("Dhc") == cycle(5));
  CHECK(parse_graph6(">>graph6<<Dhc") == cycle(5));
  CHECK(parse_graph6("Dhc\n") == cycle(5));

  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6(":Fa@x^"), ParseError);   // sparse6
  CHECK_THROWS_AS(parse_graph6(";Fa@x^"), ParseError);   // incremental sparse6
  CHECK_THROWS_AS(parse_graph6("&DGGC"), ParseError);    // digraph6
  CHECK_THROWS_AS(parse_graph6("D"), ParseError);        // truncated body
  CHECK_THROWS_AS(parse_graph6("Dhcc"), ParseError);     // trailing garbage
  CHECK_THROWS_AS(parse_graph6("Dh\x1c"), ParseError);   // byte below printable range
}

TEST_CASE("graph6 round trip on families and the small corpus") {
  for (const Graph& g : {prism(4), path(10), cycle(9), complete(6), edgeless(5),
                         gnp(12, 0.5, 3), gnp(63, 0.1, 1), gnp(64, 0.1, 1)}) {
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : testsupport::nonisomorphic_graphs(n))
      CHECK(parse_graph6(to_graph6(g)) == g);
}
