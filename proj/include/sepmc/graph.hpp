#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sepmc {

/// Canonical vertex set: strictly increasing vertex ids. This is the
/// universal currency for separators, modules and potential maximal cliques.
using VertexSet = std::vector<int>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool adjacent(int u, int v) const { return mat_[u][v]; }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  /// Edges as (u, v) pairs with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::vector<bool>> mat_;
};

// Sorted-set helpers for VertexSet values.
bool is_canonical_set(const VertexSet& s);
bool set_contains(const VertexSet& s, int v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
std::string set_to_string(const VertexSet& s);

VertexSet all_vertices(const Graph& g);

/// Throws std::invalid_argument unless s is sorted, duplicate-free and within [0, n).
void require_valid_set(const Graph& g, const VertexSet& s, const char* what);

/// Open neighborhood of a set: union of neighbors of s, minus s itself.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

/// Connected components of G - removed, each sorted, ordered by minimum vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);

/// True iff s is nonempty and G[s] is connected.
bool is_connected_set(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  VertexSet to_parent;  // new id -> original id, order preserving
};

InducedSubgraph induced(const Graph& g, const VertexSet& s);

}  // namespace sepmc
