#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "corpus.hpp"
#include "sepmc/generators.hpp"
#include "sepmc/recognition.hpp"

using namespace sepmc;
using testsupport::nonisomorphic_graphs;

namespace {

// reference search: all induced paths on t vertices, lexicographically
// smallest sequence, by plain enumeration over ordered vertex tuples
std::optional<std::vector<int>> smallest_induced_path(const Graph& g, int t) {
  int n = g.vertex_count();
  std::vector<int> seq;
  std::optional<std::vector<int>> best;
  auto rec = [&](auto&& self) -> void {
    if (best) return;  // first hit in lexicographic order is the smallest
    if (static_cast<int>(seq.size()) == t) {
      best = seq;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < seq.size() && ok; ++i) {
        bool want = i + 1 == seq.size();
        ok = g.adjacent(seq[i], v) == want;
      }
      if (!ok) continue;
      seq.push_back(v);
      self(self);
      seq.pop_back();
    }
  };
  rec(rec);
  return best;
}

}  // namespace

TEST_CASE("find_induced_path basics") {
  CHECK(find_induced_path(path(6), 6) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK_FALSE(find_induced_path(prism(4), 5).has_value());
  CHECK_FALSE(find_induced_path(complete(3), 4).has_value());
  CHECK(find_induced_path(path(3), 1) == std::vector<int>{0});
  CHECK_FALSE(find_induced_path(Graph(0, {}), 1).has_value());
  CHECK_THROWS_AS(find_induced_path(path(3), 0), std::invalid_argument);
}

TEST_CASE("pt-freeness") {
  for (int n = 2; n <= 6; ++n) CHECK(is_pt_free(prism(n), 5));
  CHECK_FALSE(is_pt_free(path(7), 6));
  CHECK(is_pt_free(edgeless(4), 2));
  CHECK_FALSE(is_pt_free(path(2), 2));
  CHECK(is_pt_free(cycle(6), 6));       // the 6-cycle has no induced 6-path
  CHECK_FALSE(is_pt_free(cycle(7), 6));
}

TEST_CASE("witnesses are valid induced paths and lexicographically smallest") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : nonisomorphic_graphs(n))
      for (int t = 1; t <= n; ++t) {
        auto got = find_induced_path(g, t);
        auto want = smallest_induced_path(g, t);
        CHECK(got.has_value() == want.has_value());
        if (got) {
          CHECK(is_induced_path(g, *got));
          CHECK(*got == *want);
        }
      }
}

TEST_CASE("induced path validity checker") {
  Graph p4 = path(4);
  CHECK(is_induced_path(p4, {0, 1, 2, 3}));
  CHECK(is_induced_path(p4, {3, 2, 1, 0}));
  CHECK_FALSE(is_induced_path(p4, {0, 1, 2, 2}));
  CHECK_FALSE(is_induced_path(p4, {0, 2}));
  CHECK_FALSE(is_induced_path(cycle(4), {0, 1, 2, 3}));  // endpoints adjacent
}

TEST_CASE("clique number examples") {
  CHECK(clique_number(complete(5)) == 5);
  CHECK(clique_number(cycle(5)) == 2);
  CHECK(clique_number(Graph(0, {})) == 0);
  CHECK(clique_number(edgeless(4)) == 1);
  for (int n = 1; n <= 6; ++n) CHECK(clique_number(prism(n)) == std::max(n, 2));
}

TEST_CASE("clique number matches exhaustive maximization up to 8 vertices") {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : nonisomorphic_graphs(n))
      CHECK(clique_number(g) == testsupport::brute_clique_number(g));
}

TEST_CASE("a graph containing an induced path contains all shorter ones") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = gnp(10, 0.3 + 0.04 * static_cast<double>(seed % 5), seed);
    int longest = 0;
    for (int t = 1; t <= 10; ++t)
      if (find_induced_path(g, t)) longest = t;
    for (int t = 1; t <= longest; ++t) CHECK(find_induced_path(g, t).has_value());
    for (int t = longest + 1; t <= 10; ++t) CHECK_FALSE(find_induced_path(g, t).has_value());
  }
}
