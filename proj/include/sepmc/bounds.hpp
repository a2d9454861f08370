#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sepmc/graph.hpp"

namespace sepmc {

using BigInt = boost::multiprecision::cpp_int;

struct BoundsCheck {
  std::string name;
  BigInt lhs;
  BigInt rhs;
  bool pass;
};

// One verification pass over a graph: exact counts plus the seven counting
// checks. STRONG, BT_A and BT_B hold on every graph; the other four are
// certified only for P6-free inputs (with k the exact clique number).
struct BoundsReport {
  int n = 0;
  int k = 0;
  long long a = 0;  // minimal separators
  long long b = 0;  // potential maximal cliques
  long long strong_module_count = 0;
  long long connected_module_count = 0;
  bool is_p6_free = false;
  std::vector<BoundsCheck> checks;
};

// Computes every count (brute-force oracles when n fits the oracle limit, the
// generic enumerators otherwise) and evaluates all checks with exact
// arbitrary-precision arithmetic. Requires n >= 1.
BoundsReport verify_bounds(const Graph& g);

// True iff every check that the report asserts must hold does hold: the
// unconditional ones always, all of them when the graph is P6-free.
bool required_checks_pass(const BoundsReport& report);

std::string to_text(const BoundsReport& report);
std::string to_json(const BoundsReport& report);

}  // namespace sepmc
