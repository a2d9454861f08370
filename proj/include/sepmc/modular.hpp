#pragma once

#include <vector>

#include "sepmc/graph.hpp"

namespace sepmc {

enum class ContainerCase { EQUALS_STRONG, UNION_OF_COMPONENTS, UNION_OF_COCOMPONENTS };

const char* container_case_name(ContainerCase c);

// A module together with its minimal strong container and how the module sits
// inside it: equal to it, a union of >= 2 components of the induced container,
// or a union of >= 2 co-components.
struct ModuleRecord {
  VertexSet members;
  VertexSet container;
  ContainerCase kind;
};

// True iff every vertex outside m is adjacent to all of m or to none of m.
// m must be nonempty and valid.
bool is_module(const Graph& g, const VertexSet& m);

// All strong modules (modules overlapping no other module), canonical order.
// Count is at most 2n-1.
std::vector<VertexSet> strong_modules(const Graph& g);

// The partition of V into inclusion-maximal strong modules that are proper
// subsets of V. Requires n >= 2. Canonical order.
std::vector<VertexSet> maximal_proper_strong_modules(const Graph& g);

// The unique minimal strong module containing module m, with the trichotomy
// case. m must be a module.
ModuleRecord minimal_strong_container(const Graph& g, const VertexSet& m);

// All modules M with G[M] connected, enumerated as unions of co-components of
// strong modules; count is at most 2^k (2n-1). Throws BoundViolationError if
// some strong module has more than k co-components (k below the true clique
// number), instead of truncating.
std::vector<VertexSet> connected_modules(const Graph& g, int k);

// Same enumeration without the branch-count check; never throws. The number of
// co-components of any strong module is at most the clique number, so on any
// graph this stays within 2^w(g) (2n-1) candidates.
std::vector<VertexSet> connected_modules_unchecked(const Graph& g);

}  // namespace sepmc
