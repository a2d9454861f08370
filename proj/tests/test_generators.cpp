#include <doctest.h>

#include <stdexcept>

#include "corpus.hpp"
#include "sepmc/generators.hpp"
#include "sepmc/io.hpp"
#include "sepmc/recognition.hpp"
#include "sepmc/separators.hpp"

using namespace sepmc;

TEST_CASE("prism shape") {
  CHECK(testsupport::isomorphic(prism(2), cycle(4)));
  Graph pr3 = prism(3);
  CHECK(pr3.vertex_count() == 6);
  CHECK(pr3.edge_count() == 9);
  for (int i = 0; i < 3; ++i) CHECK(pr3.adjacent(i, i + 3));
  CHECK(pr3.adjacent(0, 1));
  CHECK(pr3.adjacent(3, 5));
  CHECK_FALSE(pr3.adjacent(0, 4));
  CHECK(prism(1) == Graph(2, {{0, 1}}));
}

TEST_CASE("standard families") {
  CHECK(path(4) == Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(path(1) == Graph(1, {}));
  CHECK(path(0) == Graph(0, {}));
  CHECK(cycle(3) == complete(3));
  CHECK(cycle(5) == Graph(5, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK(complete(4).edge_count() == 6);
  CHECK(edgeless(3) == Graph(3, {}));
}

TEST_CASE("gnp endpoints and determinism") {
  CHECK(gnp(6, 0.0, 7) == edgeless(6));
  CHECK(gnp(6, 1.0, 7) == complete(6));
  CHECK(gnp(8, 0.5, 99) == gnp(8, 0.5, 99));
  CHECK(gnp(8, 0.5, 99) != gnp(8, 0.5, 100));
}

TEST_CASE("gnp matches the documented splitmix64 recipe") {
  // expected edge sets computed by an independent implementation of the
  // documented recipe (splitmix64 stream, edge iff (x >> 11) < round(p*2^53))
  Graph g84 = gnp(8, 0.4, 42);
  std::vector<std::pair<int, int>> want84 = {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 7},
                                             {1, 3}, {1, 5}, {2, 5}, {2, 6}, {3, 4},
                                             {3, 7}, {4, 7}, {5, 6}};
  CHECK(g84.edges() == want84);
  Graph g55 = gnp(5, 0.5, 123);
  CHECK(g55.edges() == std::vector<std::pair<int, int>>{{2, 3}, {3, 4}});
}

TEST_CASE("family descriptors") {
  GenSpec s = parse_gen_spec("prism:3");
  CHECK(s.family == Family::Prism);
  CHECK(s.size == 3);
  CHECK(make_graph(s) == prism(3));

  GenSpec g = parse_gen_spec("gnp:8:0.4:42");
  CHECK(g.family == Family::Gnp);
  CHECK(g.size == 8);
  CHECK(g.p == doctest::Approx(0.4));
  CHECK(g.seed == 42);
  CHECK(g.seed_in_spec);
  CHECK(make_graph(g) == gnp(8, 0.4, 42));

  GenSpec g2 = parse_gen_spec("gnp:8:0.4");
  CHECK_FALSE(g2.seed_in_spec);

  CHECK(make_graph(parse_gen_spec("path:5")) == path(5));
  CHECK(make_graph(parse_gen_spec("cycle:4")) == cycle(4));
  CHECK(make_graph(parse_gen_spec("complete:4")) == complete(4));
  CHECK(make_graph(parse_gen_spec("edgeless:7")) == edgeless(7));

  CHECK_THROWS_AS(parse_gen_spec("prism"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gen_spec("prism:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gen_spec("prism:3:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gen_spec("gnp:8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gen_spec("gnp:8:1.5:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gen_spec("frob:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gen_spec("prism:-1"), std::invalid_argument);
}

TEST_CASE("the cited 3^n separator family is not fabricated") {
  CHECK_THROWS_AS(parse_gen_spec("p7tower:3"), std::invalid_argument);
}

TEST_CASE("prisms are P5-free with 2^n - 2 minimal separators") {
  for (int n = 2; n <= 6; ++n) {
    Graph pr = prism(n);
    CHECK(is_pt_free(pr, 5));
    CHECK(static_cast<long long>(enumerate_minseps_brute(pr).size()) == (1ll << n) - 2);
  }
}

TEST_CASE("gnp serialization is reproducible") {
  CHECK(to_edge_list(gnp(8, 0.5, 7)) == to_edge_list(gnp(8, 0.5, 7)));
  CHECK(to_graph6(gnp(9, 0.3, 11)) == to_graph6(gnp(9, 0.3, 11)));
}
