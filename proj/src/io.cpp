#include "sepmc/io.hpp"

#include <cstdint>
#include <sstream>
#include <vector>

namespace sepmc {

namespace {

bool is_blank(const std::string& line) {
  for (char c : line)
    if (c != ' ' && c != '\t' && c != '\r') return false;
  return true;
}

bool is_comment(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == '#';
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& line, int lineno, size_t want) {
  std::istringstream in(line);
  std::vector<long long> out;
  long long x;
  while (in >> x) out.push_back(x);
  std::string rest;
  if (in.clear(), in >> rest)
    throw ParseError("unexpected token '" + rest + "'", lineno);
  if (out.size() != want)
    throw ParseError("expected " + std::to_string(want) + " integers, got " + std::to_string(out.size()),
                     lineno);
  return out;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<bool>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line) || is_comment(line)) continue;
    if (n < 0) {
      auto hdr = parse_ints(line, lineno, 2);
      n = hdr[0];
      m = hdr[1];
      if (n < 0) throw ParseError("vertex count must be nonnegative", lineno);
      if (m < 0) throw ParseError("edge count must be nonnegative", lineno);
      seen.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
      continue;
    }
    auto uv = parse_ints(line, lineno, 2);
    long long u = uv[0], v = uv[1];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("vertex id out of range [0, " + std::to_string(n) + ")", lineno);
    if (u == v) throw ParseError("self-loop", lineno);
    if (u > v) throw ParseError("edge must be written u v with u < v", lineno);
    if (seen[u][v]) throw ParseError("duplicate edge", lineno);
    seen[u][v] = true;
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("missing header line \"n m\"", 0);
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     0);
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

constexpr const char* kGraph6Header = ">>graph6<<";

// Appends n in graph6 N(n) form.
void append_g6_size(std::string& out, int n) {
  auto push6 = [&out](std::uint64_t value, int groups) {
    for (int i = groups - 1; i >= 0; --i)
      out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    push6(static_cast<std::uint64_t>(n), 3);
  } else {
    out.push_back(126);
    out.push_back(126);
    push6(static_cast<std::uint64_t>(n), 6);
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  append_g6_size(out, n);
  int bit = 5;
  char cur = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (g.adjacent(u, v)) cur |= static_cast<char>(1 << bit);
      if (--bit < 0) {
        out.push_back(static_cast<char>(cur + 63));
        bit = 5;
        cur = 0;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(cur + 63));
  return out;
}

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.rfind(kGraph6Header, 0) == 0) s = s.substr(std::string(kGraph6Header).size());
  if (s.empty()) throw ParseError("empty graph6 string", 0);
  if (s[0] == ':' || s[0] == ';') throw ParseError("sparse6 input is not supported", 0);
  if (s[0] == '&') throw ParseError("digraph6 input is not supported", 0);
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", 0);

  size_t pos = 0;
  auto take6 = [&](int groups) {
    std::uint64_t value = 0;
    for (int i = 0; i < groups; ++i) {
      if (pos >= s.size()) throw ParseError("truncated graph6 size field", 0);
      value = (value << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
    }
    return value;
  };

  std::uint64_t n64;
  if (s[pos] != 126) {
    n64 = static_cast<std::uint64_t>(s[pos++] - 63);
  } else {
    ++pos;
    if (pos < s.size() && s[pos] == 126) {
      ++pos;
      n64 = take6(6);
    } else {
      n64 = take6(3);
    }
  }
  if (n64 > 100000) throw ParseError("graph6 vertex count too large", 0);
  const int n = static_cast<int>(n64);

  const std::uint64_t bits = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const size_t need = static_cast<size_t>((bits + 5) / 6);
  if (s.size() - pos != need)
    throw ParseError("graph6 body length mismatch: expected " + std::to_string(need) +
                         " data characters, got " + std::to_string(s.size() - pos),
                     0);

  std::vector<std::pair<int, int>> edges;
  std::uint64_t index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++index) {
      const char c = s[pos + index / 6];
      if ((c - 63) & (1 << (5 - index % 6))) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace sepmc
