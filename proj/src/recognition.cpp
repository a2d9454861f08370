#include "sepmc/recognition.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepmc {

namespace {

bool extend_path(const Graph& g, std::vector<int>& seq, std::vector<bool>& used, int t) {
  if (static_cast<int>(seq.size()) == t) return true;
  const int tail = seq.back();
  for (int v : g.neighbors(tail)) {
    if (used[v]) continue;
    bool ok = true;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      if (g.adjacent(seq[i], v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    seq.push_back(v);
    used[v] = true;
    if (extend_path(g, seq, used, t)) return true;
    used[v] = false;
    seq.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced_path(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("find_induced_path: t must be at least 1");
  const int n = g.vertex_count();
  if (t == 1) {
    if (n == 0) return std::nullopt;
    return std::vector<int>{0};
  }
  std::vector<int> seq;
  std::vector<bool> used(n, false);
  for (int s = 0; s < n; ++s) {
    seq.assign(1, s);
    used.assign(n, false);
    used[s] = true;
    if (extend_path(g, seq, used, t)) return seq;
  }
  return std::nullopt;
}

bool is_pt_free(const Graph& g, int t) { return !find_induced_path(g, t).has_value(); }

bool is_induced_path(const Graph& g, const std::vector<int>& seq) {
  const int n = g.vertex_count();
  std::vector<bool> used(n, false);
  for (int v : seq) {
    if (v < 0 || v >= n || used[v]) return false;
    used[v] = true;
  }
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
  return true;
}

namespace {

struct CliqueSearch {
  const Graph& g;
  int best = 0;

  explicit CliqueSearch(const Graph& graph) : g(graph) {}

  // Greedy coloring of cand (ascending ids within a color class); returns the
  // vertices reordered by color, parallel to their color numbers.
  void color_sort(const std::vector<int>& cand, std::vector<int>& order, std::vector<int>& colors) {
    order.clear();
    colors.clear();
    std::vector<std::vector<int>> classes;
    for (int v : cand) {
      size_t c = 0;
      while (c < classes.size()) {
        bool clash = false;
        for (int u : classes[c]) {
          if (g.adjacent(u, v)) {
            clash = true;
            break;
          }
        }
        if (!clash) break;
        ++c;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    for (size_t c = 0; c < classes.size(); ++c) {
      for (int v : classes[c]) {
        order.push_back(v);
        colors.push_back(static_cast<int>(c) + 1);
      }
    }
  }

  void expand(std::vector<int>& clique, const std::vector<int>& cand) {
    std::vector<int> order, colors;
    color_sort(cand, order, colors);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(clique.size()) + colors[i] <= best) return;
      const int v = order[i];
      clique.push_back(v);
      std::vector<int> next;
      for (int j = 0; j < i; ++j)
        if (g.adjacent(order[j], v)) next.push_back(order[j]);
      if (next.empty())
        best = std::max(best, static_cast<int>(clique.size()));
      else
        expand(clique, next);
      clique.pop_back();
    }
  }
};

}  // namespace

int clique_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  CliqueSearch search(g);
  search.best = 1;
  std::vector<int> clique;
  search.expand(clique, all_vertices(g));
  return search.best;
}

}  // namespace sepmc
