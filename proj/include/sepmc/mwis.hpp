#pragma once

#include <vector>

#include "sepmc/graph.hpp"
#include "sepmc/pmc.hpp"
#include "sepmc/separators.hpp"

namespace sepmc {

struct WeightedGraph {
  Graph graph;
  std::vector<long long> weights;  // one non-negative weight per vertex
};

// A full block of the decomposition: C is a component of G - S whose
// neighborhood is exactly S.
struct Block {
  VertexSet separator;
  VertexSet component;
};

struct MwisResult {
  long long weight = 0;
  VertexSet members;
};

// Exhaustive scan over all vertex subsets; refuses n above the oracle limit.
MwisResult mwis_brute(const WeightedGraph& wg);

// Dynamic program over full blocks ordered by |S u C|, with every potential
// maximal clique S <= Omega <= S u C as a candidate bag. An independent set
// meets some minimal triangulation's bags in at most one vertex each, so block
// states carry the single solution vertex inside S (or none). Requires the
// complete PMC and minimal-separator lists of the graph; disconnected inputs
// are solved per component and summed.
MwisResult mwis_pmc(const WeightedGraph& wg, const std::vector<PmcRecord>& pmcs,
                    const std::vector<SeparatorRecord>& minseps);

}  // namespace sepmc
