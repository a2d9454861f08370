#include "sepmc/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sepmc {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: vertex count must be non-negative");
  adj_.resize(n_);
  mat_.assign(n_, std::vector<bool>(n_, false));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loops are not allowed");
    if (mat_[u][v]) continue;
    mat_[u][v] = mat_[v][u] = true;
  }
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v)
      if (mat_[u][v]) adj_[u].push_back(v);
    m_ += static_cast<int>(adj_[u].size());
  }
  m_ /= 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool is_canonical_set(const VertexSet& s) {
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string set_to_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ", ";
    os << s[i];
  }
  os << '}';
  return os.str();
}

VertexSet all_vertices(const Graph& g) {
  VertexSet out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out[v] = v;
  return out;
}

void require_valid_set(const Graph& g, const VertexSet& s, const char* what) {
  if (!is_canonical_set(s))
    throw std::invalid_argument(std::string(what) + ": vertex set must be sorted and duplicate-free");
  if (!s.empty() && (s.front() < 0 || s.back() >= g.vertex_count()))
    throw std::invalid_argument(std::string(what) + ": vertex id out of range");
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  require_valid_set(g, s, "neighborhood");
  std::vector<bool> hit(g.vertex_count(), false);
  for (int v : s)
    for (int w : g.neighbors(v)) hit[w] = true;
  for (int v : s) hit[v] = false;
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (hit[v]) out.push_back(v);
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  require_valid_set(g, removed, "components");
  const int n = g.vertex_count();
  std::vector<bool> gone(n, false);
  for (int v : removed) gone[v] = true;
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (gone[start] || seen[start]) continue;
    VertexSet comp;
    stack.push_back(start);
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!gone[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;  // ordered by minimum vertex since starts are ascending
}

bool is_connected_set(const Graph& g, const VertexSet& s) {
  require_valid_set(g, s, "is_connected_set");
  if (s.empty()) return false;
  std::vector<bool> in(g.vertex_count(), false);
  for (int v : s) in[v] = true;
  std::vector<int> stack{s.front()};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[s.front()] = true;
  size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (in[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  require_valid_set(g, s, "induced");
  std::vector<int> local(g.vertex_count(), -1);
  for (size_t i = 0; i < s.size(); ++i) local[s[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < s.size(); ++i)
    for (int w : g.neighbors(s[i]))
      if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[w]);
  return InducedSubgraph{Graph(static_cast<int>(s.size()), edges), s};
}

}  // namespace sepmc
