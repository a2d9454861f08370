#pragma once

#include <vector>

#include "sepmc/graph.hpp"
#include "sepmc/separators.hpp"

namespace sepmc {

// A potential maximal clique Omega with the neighborhoods N(C) of every
// component C of G - Omega (component order: by minimum vertex).
struct PmcRecord {
  VertexSet members;
  std::vector<VertexSet> component_neighborhoods;
};

// Bouchitte-Todinca characterization: s is a potential maximal clique iff
// (1) no component of G - s is a full component of s, and (2) every
// non-adjacent pair u, v in s lies in some common component neighborhood.
bool is_pmc(const Graph& g, const VertexSet& s);

PmcRecord make_pmc_record(const Graph& g, const VertexSet& s);

// Exhaustive scan over all nonempty subsets; refuses n above the oracle limit.
std::vector<PmcRecord> enumerate_pmcs_brute(const Graph& g);

// Candidate recipe over the complete minimal-separator list: every N[v], every
// S, every S with one extra vertex, and every S extended by S' restricted to
// one component of G - S; on top of that, closed neighborhoods taken inside
// every block G[S + C] (C a full component of G - S, S completed into a
// clique), recursively over each block's own minimal separators. Candidates
// are filtered through is_pmc. Complete whenever minseps is complete: a
// potential maximal clique leaving at most one component is some N[v], and
// any other is again a potential maximal clique of a strictly smaller block.
std::vector<PmcRecord> enumerate_pmcs_from_minseps(const Graph& g,
                                                   const std::vector<SeparatorRecord>& minseps);

}  // namespace sepmc
