#pragma once

#include <cstdint>
#include <string>

#include "sepmc/graph.hpp"

namespace sepmc {

enum class Family { Prism, Path, Cycle, Complete, Edgeless, Gnp };

/// Parsed form of a family descriptor such as "prism:3" or "gnp:8:0.5:42".
struct GenSpec {
  Family family = Family::Edgeless;
  int size = 0;
  double p = 0.0;             // Gnp only
  std::uint64_t seed = 0;     // Gnp only
  bool seed_in_spec = false;  // true when the descriptor carried its own seed
};

std::string family_name(Family f);

/// Parses "family:size" or "gnp:size:p[:seed]". Throws std::invalid_argument
/// on malformed descriptors or unknown families.
GenSpec parse_gen_spec(const std::string& text);

Graph make_graph(const GenSpec& spec);

/// Two n-cliques {0..n-1} and {n..2n-1} joined by the matching {i, n+i}.
Graph prism(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph edgeless(int n);

/// Seeded G(n, p): pairs (u, v), u < v, are visited in lexicographic order;
/// for each pair one splitmix64 value x is drawn and the edge is included
/// iff (x >> 11) < round(p * 2^53). Identical (n, p, seed) always yields an
/// identical edge set, independent of platform.
Graph gnp(int n, double p, std::uint64_t seed);

}  // namespace sepmc
