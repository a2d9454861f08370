#pragma once

#include <stdexcept>
#include <string>

#include "sepmc/graph.hpp"

namespace sepmc {

// Raised by the text parsers; line is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list text: optional '#' comment lines, a "n m" header, then m lines
// "u v" with 0 <= u < v < n. Blank lines are ignored.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// graph6 (one graph per string, no trailing newline required). The optional
// ">>graph6<<" prefix is accepted on input and never produced on output.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

}  // namespace sepmc
