#pragma once

#include <array>
#include <optional>

#include "core/families.hpp"
#include "core/graph.hpp"

namespace qx {

// True iff some vertex pair has two common neighbors (a 4-cycle subgraph).
bool has_c4(const Graph& g);

// Witness (a, x, b, y): a, b is the pair and x, y are two common neighbors,
// i.e. the 4-cycle a-x-b-y. Deterministically the first violation found by
// the lowest-index scan.
std::optional<std::array<int, 4>> find_c4(const Graph& g);

// True iff K_{1,s} is a subgraph, i.e. max degree >= s.
bool contains_star(const Graph& g, int s);

// m edges, no isolated vertices, no 4-cycle, no K_{1,m-k}.
bool is_admissible(const Graph& g, const ExtremalParams& p);

// Would adding edge (a, b) close a 4-cycle? Assumes g is C4-free; the new
// cycle must use the new edge, i.e. a path of length 3 from a to b exists.
bool edge_addition_creates_c4(const Graph& g, int a, int b);

}  // namespace qx
