#include "sepmc/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sepmc {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void require_size(int n, int least, const char* family) {
  if (n < least)
    throw std::invalid_argument(std::string(family) + ": size must be at least " + std::to_string(least));
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Prism: return "prism";
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Edgeless: return "edgeless";
    case Family::Gnp: return "gnp";
  }
  return "?";
}

GenSpec parse_gen_spec(const std::string& text) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(':', pos);
    if (next == std::string::npos) {
      parts.push_back(text.substr(pos));
      break;
    }
    parts.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  if (parts.empty() || parts[0].empty())
    throw std::invalid_argument("family spec: expected family:size[:p:seed]");

  const std::string& fam = parts[0];
  if (fam == "p7tower")
    throw std::invalid_argument(
        "family 'p7tower' is not implemented: the known P7-free clique-number-2 "
        "construction with 3^n minimal separators is not reproduced here");

  GenSpec spec;
  if (fam == "prism") spec.family = Family::Prism;
  else if (fam == "path") spec.family = Family::Path;
  else if (fam == "cycle") spec.family = Family::Cycle;
  else if (fam == "complete") spec.family = Family::Complete;
  else if (fam == "edgeless") spec.family = Family::Edgeless;
  else if (fam == "gnp") spec.family = Family::Gnp;
  else throw std::invalid_argument("family spec: unknown family '" + fam + "'");

  if (parts.size() < 2)
    throw std::invalid_argument("family spec: missing size in '" + text + "'");
  try {
    spec.size = std::stoi(parts[1]);
  } catch (...) {
    throw std::invalid_argument("family spec: bad size '" + parts[1] + "'");
  }
  if (spec.size < 0)
    throw std::invalid_argument("family spec: size must be non-negative");

  if (spec.family == Family::Gnp) {
    if (parts.size() != 3 && parts.size() != 4)
      throw std::invalid_argument("family spec: gnp requires gnp:size:p[:seed]");
    try {
      spec.p = std::stod(parts[2]);
      spec.seed = parts.size() == 4 ? std::stoull(parts[3]) : 0;
      spec.seed_in_spec = parts.size() == 4;
    } catch (...) {
      throw std::invalid_argument("family spec: bad gnp parameters in '" + text + "'");
    }
    if (!(spec.p >= 0.0 && spec.p <= 1.0))
      throw std::invalid_argument("family spec: gnp probability must lie in [0, 1]");
  } else if (parts.size() != 2) {
    throw std::invalid_argument("family spec: '" + fam + "' takes exactly one parameter");
  }
  return spec;
}

Graph make_graph(const GenSpec& spec) {
  switch (spec.family) {
    case Family::Prism: return prism(spec.size);
    case Family::Path: return path(spec.size);
    case Family::Cycle: return cycle(spec.size);
    case Family::Complete: return complete(spec.size);
    case Family::Edgeless: return edgeless(spec.size);
    case Family::Gnp: return gnp(spec.size, spec.p, spec.seed);
  }
  throw std::invalid_argument("family spec: unknown family");
}

Graph prism(int n) {
  require_size(n, 1, "prism");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.emplace_back(i, j);
      edges.emplace_back(n + i, n + j);
    }
    edges.emplace_back(i, n + i);
  }
  return Graph(2 * n, edges);
}

Graph path(int n) {
  require_size(n, 0, "path");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  require_size(n, 3, "cycle");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph complete(int n) {
  require_size(n, 0, "complete");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph edgeless(int n) {
  require_size(n, 0, "edgeless");
  return Graph(n, {});
}

Graph gnp(int n, double p, std::uint64_t seed) {
  require_size(n, 0, "gnp");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("gnp: p must lie in [0, 1]");
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(std::llround(p * 9007199254740992.0));  // p * 2^53
  std::uint64_t state = seed;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t x = splitmix64(state);
      if ((x >> 11) < threshold) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace sepmc
