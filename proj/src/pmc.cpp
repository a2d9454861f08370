#include "sepmc/pmc.hpp"

#include <set>
#include <stdexcept>

#include "sepmc/config.hpp"
#include "sepmc/errors.hpp"

namespace sepmc {

namespace {

std::vector<VertexSet> component_neighborhoods(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  for (const auto& c : components(g, s)) out.push_back(neighborhood(g, c));
  return out;
}

bool is_pmc_with(const Graph& g, const VertexSet& s, const std::vector<VertexSet>& nbhds) {
  for (const auto& nb : nbhds)
    if (nb == s) return false;
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) continue;
      bool covered = false;
      for (const auto& nb : nbhds) {
        if (set_contains(nb, s[i]) && set_contains(nb, s[j])) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace

bool is_pmc(const Graph& g, const VertexSet& s) {
  require_valid_set(g, s, "is_pmc");
  if (s.empty()) throw std::invalid_argument("is_pmc: potential maximal cliques are nonempty");
  return is_pmc_with(g, s, component_neighborhoods(g, s));
}

PmcRecord make_pmc_record(const Graph& g, const VertexSet& s) {
  return {s, component_neighborhoods(g, s)};
}

namespace {

std::vector<PmcRecord> records_from(const Graph& g, const std::set<VertexSet>& members) {
  std::vector<PmcRecord> out;
  out.reserve(members.size());
  for (const auto& s : members) out.push_back(make_pmc_record(g, s));
  return out;
}

}  // namespace

std::vector<PmcRecord> enumerate_pmcs_brute(const Graph& g) {
  const int n = g.vertex_count();
  const int limit = oracle_limit();
  if (n > limit)
    throw OracleLimitError("enumerate_pmcs_brute: n=" + std::to_string(n) +
                           " exceeds the oracle limit " + std::to_string(limit));
  std::set<VertexSet> found;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (mask & (1ull << v)) s.push_back(v);
    if (is_pmc_with(g, s, component_neighborhoods(g, s))) found.insert(std::move(s));
  }
  return records_from(g, found);
}

namespace {

// Graph on s + c with s completed into a clique, in ascending-vertex local
// labels; to_parent maps local ids back to g's ids.
struct Realization {
  Graph graph;
  VertexSet to_parent;
};

Realization make_realization(const Graph& g, const VertexSet& s, const VertexSet& c) {
  VertexSet verts = set_union(s, c);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j])) edges.emplace_back(i, j);
  std::vector<int> local(g.vertex_count(), -1);
  for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) edges.emplace_back(local[s[i]], local[s[j]]);
  return {Graph(static_cast<int>(verts.size()), edges), std::move(verts)};
}

// parent labels followed by the packed adjacency rows: identifies a
// realization independently of the block path that produced it
std::vector<std::uint64_t> realization_signature(const Realization& r) {
  const int n = r.graph.vertex_count();
  std::vector<std::uint64_t> sig(r.to_parent.begin(), r.to_parent.end());
  std::uint64_t word = 0;
  int filled = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      word = (word << 1) | (r.graph.adjacent(u, v) ? 1 : 0);
      if (++filled == 64) {
        sig.push_back(word);
        word = 0;
        filled = 0;
      }
    }
  if (filled) sig.push_back(word << (64 - filled));
  return sig;
}

}  // namespace

std::vector<PmcRecord> enumerate_pmcs_from_minseps(const Graph& g,
                                                   const std::vector<SeparatorRecord>& minseps) {
  const int n = g.vertex_count();
  std::set<VertexSet> found;
  auto consider = [&](VertexSet s) {
    if (s.empty() || found.count(s)) return;
    if (is_pmc_with(g, s, component_neighborhoods(g, s))) found.insert(std::move(s));
  };

  for (int v = 0; v < n; ++v) consider(set_union(g.neighbors(v), {v}));
  for (const auto& rec : minseps) {
    const VertexSet& s = rec.separator;
    consider(s);
    for (int v = 0; v < n; ++v)
      if (!set_contains(s, v)) consider(set_union(s, {v}));
    auto comps = components(g, s);
    for (const auto& other : minseps) {
      for (const auto& c : comps) {
        VertexSet extra = set_intersection(other.separator, c);
        if (!extra.empty()) consider(set_union(s, extra));
      }
    }
  }

  // The families above miss targets that are unions of three or more
  // separator neighborhoods (smallest case: a triangle with a pendant vertex
  // on each corner). Completeness argument for the recursion: when G - s has
  // at most one component, a target s is a closed neighborhood; otherwise s
  // lies inside block(S, C) = G[S + C] with S completed, for S the
  // neighborhood of any component of G - s and C the full component of
  // G - S holding the rest of s, and s is again a target of that strictly
  // smaller graph.
  std::set<std::vector<std::uint64_t>> seen;
  auto descend = [&](auto&& self, const Realization& r,
                     const std::vector<SeparatorRecord>& local_minseps) -> void {
    const Graph& h = r.graph;
    for (int v = 0; v < h.vertex_count(); ++v) {
      VertexSet closed;
      for (int u : set_union(h.neighbors(v), {v})) closed.push_back(r.to_parent[u]);
      std::sort(closed.begin(), closed.end());
      consider(std::move(closed));
    }
    for (const auto& rec : local_minseps) {
      for (const auto& c : rec.full_components) {
        Realization sub = make_realization(h, rec.separator, c);
        for (int& v : sub.to_parent) v = r.to_parent[v];
        if (!seen.insert(realization_signature(sub)).second) continue;
        auto sub_minseps = enumerate_minseps_generic(sub.graph);
        self(self, sub, sub_minseps);
      }
    }
  };
  VertexSet identity(n);
  for (int v = 0; v < n; ++v) identity[v] = v;
  descend(descend, {g, identity}, minseps);

  return records_from(g, found);
}

}  // namespace sepmc
