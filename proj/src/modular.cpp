#include "sepmc/modular.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sepmc/errors.hpp"

namespace sepmc {

const char* container_case_name(ContainerCase c) {
  switch (c) {
    case ContainerCase::EQUALS_STRONG: return "EQUALS_STRONG";
    case ContainerCase::UNION_OF_COMPONENTS: return "UNION_OF_COMPONENTS";
    case ContainerCase::UNION_OF_COCOMPONENTS: return "UNION_OF_COCOMPONENTS";
  }
  return "?";
}

bool is_module(const Graph& g, const VertexSet& m) {
  require_valid_set(g, m, "is_module");
  if (m.empty()) throw std::invalid_argument("is_module: modules are nonempty");
  std::vector<bool> inside(g.vertex_count(), false);
  for (int v : m) inside[v] = true;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (inside[w]) continue;
    int hits = 0;
    for (int v : m)
      if (g.adjacent(w, v)) ++hits;
    if (hits != 0 && hits != static_cast<int>(m.size())) return false;
  }
  return true;
}

namespace {

// Minimal module of h containing {u, v}: close under splitters (a vertex
// adjacent to some but not all of the current set must join it).
VertexSet min_module_containing(const Graph& h, int u, int v) {
  const int n = h.vertex_count();
  std::vector<bool> in(n, false);
  in[u] = in[v] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int w = 0; w < n; ++w) {
      if (in[w]) continue;
      bool some = false, all = true;
      for (int x = 0; x < n; ++x) {
        if (!in[x]) continue;
        if (h.adjacent(w, x)) some = true;
        else all = false;
      }
      if (some && !all) {
        in[w] = true;
        grew = true;
      }
    }
  }
  VertexSet out;
  for (int w = 0; w < n; ++w)
    if (in[w]) out.push_back(w);
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Maximal proper strong modules of h (local ids); requires |V(h)| >= 2.
// Disconnected: the components. Co-disconnected: the co-components. Prime:
// classes of "some module other than V contains both".
std::vector<VertexSet> mpsm_local(const Graph& h) {
  const int n = h.vertex_count();
  auto comps = components(h, {});
  if (comps.size() >= 2) return comps;
  Graph co = complement(h);
  auto cocomps = components(co, {});
  if (cocomps.size() >= 2) return cocomps;

  UnionFind uf(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uf.find(u) == uf.find(v)) continue;
      VertexSet m = min_module_containing(h, u, v);
      if (static_cast<int>(m.size()) == n) continue;
      for (size_t i = 1; i < m.size(); ++i) uf.unite(m[0], m[i]);
    }
  }
  std::vector<VertexSet> classes(n);
  for (int v = 0; v < n; ++v) classes[uf.find(v)].push_back(v);
  std::vector<VertexSet> parts;
  for (auto& c : classes)
    if (!c.empty()) parts.push_back(std::move(c));
  std::sort(parts.begin(), parts.end());
  return parts;
}

std::vector<VertexSet> map_sets(const std::vector<VertexSet>& sets, const VertexSet& to_parent) {
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    VertexSet mapped;
    mapped.reserve(s.size());
    for (int v : s) mapped.push_back(to_parent[v]);
    std::sort(mapped.begin(), mapped.end());
    out.push_back(std::move(mapped));
  }
  return out;
}

void collect_strong(const Graph& g, const VertexSet& node, std::vector<VertexSet>& out) {
  out.push_back(node);
  if (node.size() <= 1) return;
  auto ind = induced(g, node);
  auto parts = map_sets(mpsm_local(ind.graph), ind.to_parent);
  for (const auto& part : parts) collect_strong(g, part, out);
}

// Parts of `parts` fully inside m; valid as a decomposition of m only if their
// union is exactly m.
int count_covering_parts(const std::vector<VertexSet>& parts, const VertexSet& m) {
  size_t covered = 0;
  int used = 0;
  for (const auto& part : parts) {
    if (is_subset(part, m)) {
      covered += part.size();
      ++used;
    }
  }
  return covered == m.size() ? used : 0;
}

}  // namespace

std::vector<VertexSet> strong_modules(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.vertex_count() == 0) return out;
  collect_strong(g, all_vertices(g), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> maximal_proper_strong_modules(const Graph& g) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("maximal_proper_strong_modules: need at least two vertices");
  return mpsm_local(g);
}

ModuleRecord minimal_strong_container(const Graph& g, const VertexSet& m) {
  if (!is_module(g, m))
    throw std::invalid_argument("minimal_strong_container: argument is not a module");

  VertexSet cur = all_vertices(g);
  while (cur != m && cur.size() > 1) {
    auto ind = induced(g, cur);
    auto parts = map_sets(mpsm_local(ind.graph), ind.to_parent);
    bool descended = false;
    for (const auto& part : parts) {
      if (is_subset(m, part)) {
        cur = part;
        descended = true;
        break;
      }
    }
    if (!descended) break;
  }

  if (cur == m) return {m, cur, ContainerCase::EQUALS_STRONG};

  VertexSet rest = set_difference(all_vertices(g), cur);
  auto comps = components(g, rest);
  if (comps.size() >= 2 && count_covering_parts(comps, m) >= 2)
    return {m, cur, ContainerCase::UNION_OF_COMPONENTS};

  auto ind = induced(g, cur);
  auto cocomps = map_sets(components(complement(ind.graph), {}), ind.to_parent);
  if (cocomps.size() >= 2 && count_covering_parts(cocomps, m) >= 2)
    return {m, cur, ContainerCase::UNION_OF_COCOMPONENTS};

  throw std::logic_error("minimal_strong_container: trichotomy failed");
}

namespace {

std::vector<VertexSet> connected_modules_impl(const Graph& g, int k, bool check_bound) {
  std::set<VertexSet> out;
  if (g.vertex_count() == 0) return {};
  for (const auto& strong : strong_modules(g)) {
    auto ind = induced(g, strong);
    auto cocomps = map_sets(components(complement(ind.graph), {}), ind.to_parent);
    const int p = static_cast<int>(cocomps.size());
    if (check_bound && p > k)
      throw BoundViolationError(
          "connected_modules: a strong module has " + std::to_string(p) +
          " co-components, above the clique bound " + std::to_string(k) +
          "; the bound is below the true clique number");
    if (p > 62)
      throw std::invalid_argument("connected_modules: clique number too large to enumerate");
    for (unsigned long long mask = 1; mask < (1ull << p); ++mask) {
      VertexSet cand;
      for (int i = 0; i < p; ++i)
        if (mask & (1ull << i)) cand = set_union(cand, cocomps[i]);
      if (is_module(g, cand) && is_connected_set(g, cand)) out.insert(std::move(cand));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<VertexSet> connected_modules(const Graph& g, int k) {
  return connected_modules_impl(g, k, true);
}

std::vector<VertexSet> connected_modules_unchecked(const Graph& g) {
  return connected_modules_impl(g, 0, false);
}

}  // namespace sepmc
