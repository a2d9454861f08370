#include "sepmc/mwis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "sepmc/config.hpp"
#include "sepmc/errors.hpp"

namespace sepmc {

namespace {

void require_weights(const WeightedGraph& wg, const char* who) {
  if (static_cast<int>(wg.weights.size()) != wg.graph.vertex_count())
    throw std::invalid_argument(std::string(who) + ": one weight per vertex required");
  for (long long w : wg.weights)
    if (w < 0) throw std::invalid_argument(std::string(who) + ": weights must be non-negative");
}

}  // namespace

MwisResult mwis_brute(const WeightedGraph& wg) {
  require_weights(wg, "mwis_brute");
  const Graph& g = wg.graph;
  const int n = g.vertex_count();
  const int limit = oracle_limit();
  if (n > limit)
    throw OracleLimitError("mwis_brute: n=" + std::to_string(n) +
                           " exceeds the oracle limit " + std::to_string(limit));
  MwisResult best;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    long long weight = 0;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (!(mask & (1ull << u))) continue;
      weight += wg.weights[u];
      for (int v = u + 1; v < n; ++v)
        if ((mask & (1ull << v)) && g.adjacent(u, v)) {
          ok = false;
          break;
        }
    }
    if (!ok || weight <= best.weight) continue;
    best.weight = weight;
    best.members.clear();
    for (int v = 0; v < n; ++v)
      if (mask & (1ull << v)) best.members.push_back(v);
  }
  return best;
}

namespace {

constexpr int kNone = -1;  // "no solution vertex in this separator"

struct Entry {
  long long value = std::numeric_limits<long long>::min();
  int pmc = -1;
  int j = kNone;
};

struct BlockSolver {
  const Graph& g;
  const std::vector<long long>& weights;
  const std::vector<PmcRecord>& pmcs;
  VertexSet everything;

  std::vector<Block> blocks;
  std::map<std::pair<VertexSet, VertexSet>, int> block_id;
  // entries[b][sigma]: best weight of I cap C over independent sets of
  // G[S u C] with I cap S = {sigma} (or empty for kNone), counting only C.
  std::vector<std::map<int, Entry>> entries;

  BlockSolver(const WeightedGraph& wg, const std::vector<PmcRecord>& pmc_list,
              const std::vector<SeparatorRecord>& minseps)
      : g(wg.graph), weights(wg.weights), pmcs(pmc_list), everything(all_vertices(g)) {
    for (const auto& rec : minseps)
      for (const auto& side : rec.full_components)
        blocks.push_back({rec.separator, side});
    std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
      const size_t sx = x.separator.size() + x.component.size();
      const size_t sy = y.separator.size() + y.component.size();
      if (sx != sy) return sx < sy;
      if (x.separator != y.separator) return x.separator < y.separator;
      return x.component < y.component;
    });
    entries.resize(blocks.size());
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
      block_id[{blocks[b].separator, blocks[b].component}] = b;
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b) fill_block(b);
  }

  const Entry& child_entry(const VertexSet& sep, const VertexSet& comp, int sigma) const {
    auto it = block_id.find({sep, comp});
    if (it == block_id.end())
      throw std::invalid_argument(
          "mwis_pmc: block (" + set_to_string(sep) + ", " + set_to_string(comp) +
          ") is missing; the minimal-separator list is incomplete");
    return entries[it->second].at(sigma);
  }

  // Children of bag omega inside the ground set: components of ground minus
  // omega, each looked up with its neighborhood as separator. Sums their best
  // values for solution vertex j (kNone when absent).
  long long children_value(const VertexSet& ground, const VertexSet& omega, int j) const {
    long long total = 0;
    VertexSet removed = set_union(set_difference(everything, ground), omega);
    for (const auto& comp : components(g, removed)) {
      VertexSet sep = neighborhood(g, comp);
      const int sigma = (j != kNone && set_contains(sep, j)) ? j : kNone;
      total += child_entry(sep, comp, sigma).value;
    }
    return total;
  }

  void fill_block(int b) {
    const VertexSet& s = blocks[b].separator;
    const VertexSet& c = blocks[b].component;
    const VertexSet ground = set_union(s, c);

    std::vector<int> sigmas{kNone};
    sigmas.insert(sigmas.end(), s.begin(), s.end());
    for (int sigma : sigmas) entries[b][sigma] = Entry{};

    for (int pi = 0; pi < static_cast<int>(pmcs.size()); ++pi) {
      const VertexSet& omega = pmcs[pi].members;
      if (!is_subset(s, omega) || !is_subset(omega, ground)) continue;
      for (int sigma : sigmas) {
        std::vector<int> choices;
        if (sigma != kNone) {
          choices.push_back(sigma);
        } else {
          choices.push_back(kNone);
          for (int v : omega)
            if (!set_contains(s, v)) choices.push_back(v);
        }
        for (int j : choices) {
          long long value = (j != kNone && set_contains(c, j)) ? weights[j] : 0;
          value += children_value(ground, omega, j);
          Entry& slot = entries[b][sigma];
          if (value > slot.value) slot = {value, pi, j};
        }
      }
    }
    for (int sigma : sigmas) {
      if (entries[b][sigma].pmc < 0)
        throw std::invalid_argument("mwis_pmc: no potential maximal clique fits the block (" +
                                    set_to_string(s) + ", " + set_to_string(c) +
                                    "); the PMC list is incomplete");
    }
  }

  // Root bag for one connected component of g.
  Entry solve_root(const VertexSet& comp_vertices) const {
    Entry best;
    for (int pi = 0; pi < static_cast<int>(pmcs.size()); ++pi) {
      const VertexSet& omega = pmcs[pi].members;
      if (!is_subset(omega, comp_vertices)) continue;
      std::vector<int> choices{kNone};
      choices.insert(choices.end(), omega.begin(), omega.end());
      for (int j : choices) {
        long long val = (j != kNone) ? weights[j] : 0;
        val += children_value(comp_vertices, omega, j);
        if (val > best.value) best = {val, pi, j};
      }
    }
    if (best.pmc < 0)
      throw std::invalid_argument("mwis_pmc: no potential maximal clique inside the component " +
                                  set_to_string(comp_vertices) + "; the PMC list is incomplete");
    return best;
  }

  void collect_block(const VertexSet& sep, const VertexSet& comp, int sigma,
                     std::set<int>& picked) const {
    const int b = block_id.at({sep, comp});
    const Entry& e = entries[b].at(sigma);
    collect_children(set_union(sep, comp), pmcs[e.pmc].members, e.j, picked);
    if (e.j != kNone && set_contains(comp, e.j)) picked.insert(e.j);
  }

  void collect_children(const VertexSet& ground, const VertexSet& omega, int j,
                        std::set<int>& picked) const {
    VertexSet removed = set_union(set_difference(everything, ground), omega);
    for (const auto& comp : components(g, removed)) {
      VertexSet sep = neighborhood(g, comp);
      const int sigma = (j != kNone && set_contains(sep, j)) ? j : kNone;
      collect_block(sep, comp, sigma, picked);
    }
  }
};

}  // namespace

MwisResult mwis_pmc(const WeightedGraph& wg, const std::vector<PmcRecord>& pmcs,
                    const std::vector<SeparatorRecord>& minseps) {
  require_weights(wg, "mwis_pmc");
  const Graph& g = wg.graph;
  if (g.vertex_count() == 0) return {};

  BlockSolver solver(wg, pmcs, minseps);
  MwisResult result;
  std::set<int> picked;
  for (const auto& comp_vertices : components(g, {})) {
    Entry root = solver.solve_root(comp_vertices);
    result.weight += root.value;
    solver.collect_children(comp_vertices, pmcs[root.pmc].members, root.j, picked);
    if (root.j != kNone) picked.insert(root.j);
  }
  result.members.assign(picked.begin(), picked.end());
  return result;
}

}  // namespace sepmc
