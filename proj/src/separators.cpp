#include "sepmc/separators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sepmc/config.hpp"
#include "sepmc/errors.hpp"
#include "sepmc/modular.hpp"

namespace sepmc {

const char* nei_case_name(NeiCase c) {
  switch (c) {
    case NeiCase::P4_WITNESS: return "P4_WITNESS";
    case NeiCase::ADJACENT_PQ: return "ADJACENT_PQ";
    case NeiCase::COCOMPONENT_UNION: return "COCOMPONENT_UNION";
    case NeiCase::TRICHOTOMY_FAILS: return "TRICHOTOMY_FAILS";
  }
  return "?";
}

const char* q_cover_case_name(QCoverCase c) {
  switch (c) {
    case QCoverCase::SINGLETON_A: return "SINGLETON_A";
    case QCoverCase::COCOMPONENT_TRANSVERSAL: return "COCOMPONENT_TRANSVERSAL";
    case QCoverCase::TWO_MODULE_REPS: return "TWO_MODULE_REPS";
  }
  return "?";
}

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& x) {
  require_valid_set(g, x, "full_components");
  std::vector<VertexSet> out;
  for (auto& c : components(g, x))
    if (neighborhood(g, c) == x) out.push_back(std::move(c));
  return out;
}

bool is_minimal_separator(const Graph& g, const VertexSet& x) {
  if (x.empty()) return false;
  return full_components(g, x).size() >= 2;
}

SeparatorRecord make_separator_record(const Graph& g, const VertexSet& x) {
  return {x, full_components(g, x)};
}

namespace {

std::vector<SeparatorRecord> records_from(const Graph& g, const std::set<VertexSet>& xs) {
  std::vector<SeparatorRecord> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(make_separator_record(g, x));
  return out;
}

}  // namespace

std::vector<SeparatorRecord> enumerate_minseps_brute(const Graph& g) {
  const int n = g.vertex_count();
  const int limit = oracle_limit();
  if (n > limit)
    throw OracleLimitError("enumerate_minseps_brute: n=" + std::to_string(n) +
                           " exceeds the oracle limit " + std::to_string(limit));
  std::set<VertexSet> found;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    VertexSet x;
    for (int v = 0; v < n; ++v)
      if (mask & (1ull << v)) x.push_back(v);
    if (is_minimal_separator(g, x)) found.insert(std::move(x));
  }
  return records_from(g, found);
}

std::vector<SeparatorRecord> enumerate_minseps_generic(const Graph& g) {
  const int n = g.vertex_count();
  std::set<VertexSet> seen;
  std::vector<VertexSet> queue;
  auto consider = [&](const VertexSet& x) {
    if (x.empty() || seen.count(x)) return;
    if (!is_minimal_separator(g, x)) return;
    seen.insert(x);
    queue.push_back(x);
  };

  for (int v = 0; v < n; ++v) {
    VertexSet closed = set_union(g.neighbors(v), {v});
    for (const auto& c : components(g, closed)) consider(neighborhood(g, c));
  }
  while (!queue.empty()) {
    VertexSet s = std::move(queue.back());
    queue.pop_back();
    for (int x : s) {
      VertexSet removed = set_union(s, g.neighbors(x));
      for (const auto& c : components(g, removed)) consider(neighborhood(g, c));
    }
  }
  return records_from(g, seen);
}

namespace {

// Checks that a is a full component of x_set, i.e. a is a component of
// G - x_set whose neighborhood is exactly x_set.
void require_full_side(const Graph& g, const VertexSet& x_set, const VertexSet& a,
                       const char* who) {
  require_valid_set(g, x_set, who);
  require_valid_set(g, a, who);
  if (!set_intersection(x_set, a).empty())
    throw std::invalid_argument(std::string(who) + ": side intersects the separator");
  if (!is_connected_set(g, a))
    throw std::invalid_argument(std::string(who) + ": side is not connected");
  if (neighborhood(g, a) != x_set)
    throw std::invalid_argument(std::string(who) + ": side is not a full component");
}

std::vector<VertexSet> map_local_sets(const std::vector<VertexSet>& sets,
                                      const VertexSet& to_parent) {
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    VertexSet mapped;
    mapped.reserve(s.size());
    for (int v : s) mapped.push_back(to_parent[v]);
    std::sort(mapped.begin(), mapped.end());
    out.push_back(std::move(mapped));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> cocomponents_of_side(const Graph& g, const VertexSet& a) {
  auto ind = induced(g, a);
  return map_local_sets(components(complement(ind.graph), {}), ind.to_parent);
}

std::vector<VertexSet> strong_partition_of_side(const Graph& g, const VertexSet& a) {
  auto ind = induced(g, a);
  return map_local_sets(maximal_proper_strong_modules(ind.graph), ind.to_parent);
}

bool is_union_of(const std::vector<VertexSet>& parts, const VertexSet& w) {
  size_t covered = 0;
  for (const auto& part : parts) {
    auto common = set_intersection(part, w);
    if (common.empty()) continue;
    if (common.size() != part.size()) return false;
    covered += part.size();
  }
  return covered == w.size();
}

}  // namespace

NeiWitness lemma_nei_witness(const Graph& g, const VertexSet& x_set, const VertexSet& a, int p,
                             int q, int x) {
  require_full_side(g, x_set, a, "lemma_nei_witness");
  if (a.size() < 2) throw std::invalid_argument("lemma_nei_witness: side must have >1 vertex");
  if (!set_contains(x_set, x)) throw std::invalid_argument("lemma_nei_witness: x not in the set");
  if (!set_contains(a, p) || !set_contains(a, q) || p == q)
    throw std::invalid_argument("lemma_nei_witness: p, q must be distinct vertices of the side");
  auto parts = strong_partition_of_side(g, a);
  const VertexSet* part_p = nullptr;
  const VertexSet* part_q = nullptr;
  for (const auto& part : parts) {
    if (set_contains(part, p)) part_p = &part;
    if (set_contains(part, q)) part_q = &part;
  }
  if (part_p == part_q)
    throw std::invalid_argument(
        "lemma_nei_witness: p and q lie in the same maximal proper strong module");

  if (g.adjacent(x, p) || g.adjacent(x, q)) return {NeiCase::ADJACENT_PQ, std::nullopt};

  VertexSet w = set_intersection(g.neighbors(x), a);
  auto cocomps = cocomponents_of_side(g, a);
  if (cocomps.size() >= 2 && is_union_of(cocomps, w))
    return {NeiCase::COCOMPONENT_UNION, std::nullopt};

  for (int a1 : w) {
    for (int a2 : a) {
      if (set_contains(w, a2) || !g.adjacent(a1, a2)) continue;
      for (int a3 : a) {
        if (a3 == a1 || set_contains(w, a3) || !g.adjacent(a2, a3) || g.adjacent(a1, a3)) continue;
        return {NeiCase::P4_WITNESS, std::array<int, 4>{x, a1, a2, a3}};
      }
    }
  }
  return {NeiCase::TRICHOTOMY_FAILS, std::nullopt};
}

namespace {

// First (x, B) breaking the cover guarantee for q, if any.
std::optional<std::pair<int, VertexSet>> cover_violation(const Graph& g,
                                                         const SeparatorRecord& sep, int a_index,
                                                         const VertexSet& q) {
  VertexSet uncovered = set_difference(sep.separator, neighborhood(g, q));
  for (int b_index = 0; b_index < static_cast<int>(sep.full_components.size()); ++b_index) {
    if (b_index == a_index) continue;
    const VertexSet& b = sep.full_components[b_index];
    for (int x : uncovered)
      for (int y : b)
        if (!g.adjacent(x, y)) return std::make_pair(x, b);
  }
  return std::nullopt;
}

}  // namespace

QCover build_q_cover(const Graph& g, const SeparatorRecord& sep, int a_index, int k) {
  if (k < 2) throw std::invalid_argument("build_q_cover: clique bound must be at least 2");
  if (a_index < 0 || a_index >= static_cast<int>(sep.full_components.size()))
    throw std::invalid_argument("build_q_cover: side index out of range");
  if (!is_minimal_separator(g, sep.separator))
    throw std::invalid_argument("build_q_cover: not a minimal separator");
  for (const auto& side : sep.full_components)
    require_full_side(g, sep.separator, side, "build_q_cover");

  const VertexSet& a = sep.full_components[a_index];
  const int max_size = std::max(k, 2);

  // A vertex set picked per the case at hand need not satisfy the guarantee
  // (arbitrary representatives can fail it even on P6-free inputs), so every
  // admissible same-case choice is tried, the minimum-id one first. The
  // violation of that first choice is the one reported when all fail.
  std::optional<std::pair<int, VertexSet>> first_violation;
  auto try_cover = [&](QCover cover) -> std::optional<QCover> {
    auto bad = cover_violation(g, sep, a_index, cover.q);
    if (!bad) return cover;
    if (!first_violation) first_violation = bad;
    return std::nullopt;
  };

  std::optional<QCover> found;
  if (a.size() == 1) {
    found = try_cover({a, QCoverCase::SINGLETON_A, std::nullopt, std::nullopt});
  } else {
    auto cocomps = cocomponents_of_side(g, a);
    if (cocomps.size() >= 2) {
      if (static_cast<int>(cocomps.size()) > max_size)
        throw BoundViolationError("build_q_cover: |Q|=" + std::to_string(cocomps.size()) +
                                  " exceeds max(k,2)=" + std::to_string(max_size) +
                                  "; the clique bound is below the true clique number");
      std::vector<std::size_t> pick(cocomps.size(), 0);
      for (;;) {
        VertexSet q;
        for (std::size_t i = 0; i < cocomps.size(); ++i) q.push_back(cocomps[i][pick[i]]);
        std::sort(q.begin(), q.end());
        found = try_cover({std::move(q), QCoverCase::COCOMPONENT_TRANSVERSAL, std::nullopt,
                           std::nullopt});
        if (found) break;
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == cocomps[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    } else {
      auto parts = strong_partition_of_side(g, a);
      for (std::size_t i = 0; i < parts.size() && !found; ++i)
        for (std::size_t j = i + 1; j < parts.size() && !found; ++j)
          for (int rep_p : parts[i]) {
            for (int rep_q : parts[j]) {
              VertexSet q{rep_p, rep_q};
              std::sort(q.begin(), q.end());
              found = try_cover({std::move(q), QCoverCase::TWO_MODULE_REPS, rep_p, rep_q});
              if (found) break;
            }
            if (found) break;
          }
    }
  }
  if (found) return *found;
  throw CoverViolationError(
      "build_q_cover: vertex " + std::to_string(first_violation->first) +
          " avoids N(Q) but is not complete to the full side " +
          set_to_string(first_violation->second) +
          "; no admissible choice of Q covers it (the graph is not P6-free, or the clique "
          "bound is wrong, or the side-cover guarantee fails for this instance)",
      first_violation->first, first_violation->second);
}

std::vector<SeparatorRecord> enumerate_minseps_p6free(const Graph& g, int k,
                                                      P6FreeEnumStats* stats) {
  const int n = g.vertex_count();
  const int q_max = std::max(k, 2);
  std::set<VertexSet> seen;
  long long pairs = 0;

  VertexSet q;
  auto process_q = [&]() {
    VertexSet removed;
    for (int v : q) removed = set_union(removed, g.neighbors(v));
    if (removed.empty()) return;
    auto h = induced(g, set_difference(all_vertices(g), removed));
    for (const auto& b_local : connected_modules_unchecked(h.graph)) {
      ++pairs;
      VertexSet b;
      b.reserve(b_local.size());
      for (int v : b_local) b.push_back(h.to_parent[v]);
      VertexSet x = neighborhood(g, b);
      if (is_minimal_separator(g, x)) seen.insert(std::move(x));
    }
  };
  auto extend = [&](auto&& self, int start) -> void {
    for (int v = start; v < n; ++v) {
      q.push_back(v);
      process_q();
      if (static_cast<int>(q.size()) < q_max) self(self, v + 1);
      q.pop_back();
    }
  };
  extend(extend, 0);

  if (stats) stats->candidate_pairs = pairs;
  return records_from(g, seen);
}

}  // namespace sepmc
