#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sepmc/graph.hpp"

namespace sepmc {

// A minimal separator X together with all its full sides (components C of
// G - X with N(C) = X). Always at least two full sides; X is nonempty.
struct SeparatorRecord {
  VertexSet separator;
  std::vector<VertexSet> full_components;
};

enum class NeiCase { P4_WITNESS, ADJACENT_PQ, COCOMPONENT_UNION, TRICHOTOMY_FAILS };

const char* nei_case_name(NeiCase c);

// Trichotomy certificate for a vertex x attached to a full side A: either an
// induced P4 leaving x into A, or x sees one of the two module representatives,
// or N(x) cap A is a union of co-components of G[A]. The three cases do not
// cover every instance: TRICHOTOMY_FAILS reports (after exhaustive search)
// that none of them holds, which some valid inputs genuinely reach.
struct NeiWitness {
  NeiCase kind;
  std::optional<std::array<int, 4>> p4;  // x first, then three vertices of A
};

enum class QCoverCase { SINGLETON_A, COCOMPONENT_TRANSVERSAL, TWO_MODULE_REPS };

const char* q_cover_case_name(QCoverCase c);

// A small set Q inside a full side A such that every vertex of X \ N(Q) is
// complete to every other full side (on P6-free inputs).
struct QCover {
  VertexSet q;
  QCoverCase kind;
  std::optional<int> p;   // set for TWO_MODULE_REPS
  std::optional<int> q2;  // set for TWO_MODULE_REPS
};

// Counters from the P6-free enumeration: one candidate pair per (Q, connected
// module B of G - N(Q)) examined.
struct P6FreeEnumStats {
  long long candidate_pairs = 0;
};

// Components C of G - x with N(C) = x, canonical order.
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& x);

// True iff x is nonempty and has at least two full components. The empty set
// is never a minimal separator (a disconnected graph is not "separated" by it).
bool is_minimal_separator(const Graph& g, const VertexSet& x);

// Recomputes the full-components list for a known minimal separator.
SeparatorRecord make_separator_record(const Graph& g, const VertexSet& x);

// Exhaustive scan over all vertex subsets. Refuses n above the oracle limit
// (OracleLimitError).
std::vector<SeparatorRecord> enumerate_minseps_brute(const Graph& g);

// All minimal separators of any graph: seed with neighborhoods of components
// of G - N[v], then close under the replace-one-side expansion; every
// candidate is filtered through is_minimal_separator.
std::vector<SeparatorRecord> enumerate_minseps_generic(const Graph& g);

// Trichotomy witness for x in x_set against the full side a (|a| > 1), where
// p and q lie in different maximal proper strong modules of G[a]. ADJACENT_PQ
// is returned whenever x sees p or q; otherwise COCOMPONENT_UNION if it
// certifies, else P4_WITNESS if the induced-P4 search succeeds, else
// TRICHOTOMY_FAILS (the smallest such instance has five vertices).
NeiWitness lemma_nei_witness(const Graph& g, const VertexSet& x_set, const VertexSet& a, int p,
                             int q, int x);

// The Q-construction for full side sep.full_components[a_index]: Q = A when
// |A| = 1; a transversal of the co-components of G[A] when the complement of
// G[A] is disconnected; else one vertex each from two distinct maximal proper
// strong modules of G[A]. Candidate choices within the case are tried in
// ascending vertex-id order until one satisfies the postcondition (every
// vertex of X \ N(Q) is complete to every other full side) — a fixed
// minimum-id choice is not always enough, even on P6-free inputs. Throws
// CoverViolationError with the first choice's violating (x, B) when no
// choice works.
QCover build_q_cover(const Graph& g, const SeparatorRecord& sep, int a_index, int k);

// The P6-free enumeration: for every Q with 1 <= |Q| <= max(k, 2) and
// nonempty neighborhood, every connected module B of G - N(Q) yields the
// candidate X = N(B); candidates are filtered through is_minimal_separator.
// Sound on every graph; complete when g is P6-free with clique number <= k.
std::vector<SeparatorRecord> enumerate_minseps_p6free(const Graph& g, int k,
                                                      P6FreeEnumStats* stats = nullptr);

}  // namespace sepmc
