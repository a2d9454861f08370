#pragma once

#include <stdexcept>
#include <string>

#include "sepmc/graph.hpp"

namespace sepmc {

// Brute-force oracles refuse inputs above the configured size limit.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration branched more than its certified bound allows (the supplied
// clique bound was below the true clique number).
class BoundViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The side-cover postcondition failed: vertex x is not complete to the full
// side b. Witnesses that the input was not P6-free (or the clique bound wrong).
class CoverViolationError : public std::runtime_error {
 public:
  CoverViolationError(const std::string& what, int x, VertexSet b)
      : std::runtime_error(what), x_(x), b_(std::move(b)) {}

  int x() const { return x_; }
  const VertexSet& b() const { return b_; }

 private:
  int x_;
  VertexSet b_;
};

}  // namespace sepmc
