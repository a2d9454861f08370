#pragma once

#include <optional>
#include <vector>

#include "sepmc/graph.hpp"

namespace sepmc {

// Induced path on exactly t vertices, as a vertex sequence (consecutive
// adjacent, non-consecutive non-adjacent). Absent if none exists. The witness
// is the lexicographically smallest such sequence (ascending-id DFS).
std::optional<std::vector<int>> find_induced_path(const Graph& g, int t);

bool is_pt_free(const Graph& g, int t);

// Exact maximum clique size; 0 for the empty graph. Branch and bound with a
// greedy-coloring upper bound.
int clique_number(const Graph& g);

// True iff seq is an induced path of g (every consecutive pair adjacent,
// every non-consecutive pair non-adjacent, all vertices distinct).
bool is_induced_path(const Graph& g, const std::vector<int>& seq);

}  // namespace sepmc
