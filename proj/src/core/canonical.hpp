#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "core/defaults.hpp"
#include "core/graph.hpp"

namespace qx {

/**
 * Exact canonical form of a labeled graph: the lexicographically greatest
 * upper-triangular adjacency encoding over all vertex orderings that respect
 * the color-refinement classes. Equal forms <=> isomorphic graphs.
 */
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint8_t> bits;  // packed column-major upper triangle

  auto operator<=>(const CanonicalForm&) const = default;

  // Binary key usable as an ordered map key.
  std::string key() const;

  // graph6 line of the canonically relabeled graph.
  std::string to_graph6() const;
};

CanonicalForm canonical_form(const Graph& g, int ceiling = kCanonicalCeiling);

bool isomorphic(const Graph& a, const Graph& b, int ceiling = kCanonicalCeiling);

}  // namespace qx
