#pragma once

#include <array>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace qx {

/**
 * Edge-count / star-gap parameter pair (m, k). The star cap for admissible
 * graphs is max degree <= m - k - 1.
 */
struct ExtremalParams {
  int m = 0;
  int k = 0;

  // S+ needs m - 3k - 3 >= 0 pendant vertices.
  bool splus_feasible() const { return k >= 0 && m >= 3 * k + 3; }
  // The characteristic cubic needs all three partition classes nonempty.
  bool cubic_feasible() const { return k >= 0 && m >= 3 * k + 4; }

  long long threshold() const {
    long long a = 7LL * k + 31;
    long long b = 1LL * k * k + 8LL * (k + 1);
    return a > b ? a : b;
  }
  bool theorem_threshold() const { return k >= 0 && m >= threshold(); }

  int star_cap() const { return m - k - 1; }  // max admissible degree
};

/**
 * S+ graph with its deterministic labeling: vertex 0 is the center,
 * vertices 1..2k+2 are the matched leaves in pair order, the rest are
 * pendants.
 */
struct SplusGraph {
  Graph graph;
  ExtremalParams params;

  int center() const { return 0; }
  // Partition into {center}, matched leaves, pendants; the pendant class is
  // dropped when empty (m = 3k + 3).
  std::vector<std::vector<int>> partition() const;
};

// Star K_{1,m-k-1} plus k+1 disjoint edges between its leaves; m edges on
// m - k vertices.
SplusGraph construct_splus(const ExtremalParams& p);

Graph construct_star(int m);             // K_{1,m}
Graph construct_star_union_edge(int m);  // K_{1,m-1} + disjoint K_2

/**
 * Equitable quotient of Q(G): entry (i,j) is the constant Q-row-sum from any
 * vertex of class i into class j.
 */
struct QuotientMatrix {
  int order = 0;
  std::vector<double> entries;  // row-major
  std::vector<int> block_sizes;

  double entry(int i, int j) const { return entries[i * order + j]; }

  // Real eigenvalues (descending) via the symmetric similarity scaling by
  // sqrt(block sizes).
  std::vector<double> eigenvalues() const;
};

// Validates equitability; reports a violating vertex pair otherwise.
QuotientMatrix quotient_matrix(const Graph& g,
                               const std::vector<std::vector<int>>& partition);

// Closed-form quotient of S+ (3x3, or 2x2 at the m = 3k+3 boundary).
QuotientMatrix splus_quotient(const ExtremalParams& p);

// Monic cubic with roots equal to the 3x3 quotient spectrum:
// x^3 - (m-k+3) x^2 + 3(m-k) x - 4(k+1).
std::array<double, 4> splus_cubic(const ExtremalParams& p);

// Largest root of the cubic by Newton iteration from x0 = m - k + 3
// (monotone decreasing; the start lies above the largest root).
double splus_q_closed(const ExtremalParams& p);

// Strict enclosure (m - k + 1/m^2, m - k + 2(k+1)/(m-k-1)) for q(S+).
std::pair<double, double> splus_bounds(const ExtremalParams& p);

}  // namespace qx
