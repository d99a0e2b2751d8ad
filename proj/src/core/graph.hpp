#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace qx {

// Undirected edge with normalized endpoints (u < v).
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/**
 * Immutable simple undirected graph. Vertices are 0..n-1, adjacency is kept
 * as sorted per-vertex neighbor lists. Loops and parallel edges are rejected
 * at construction. Edits (with_edge, without_edge, rotate) return new values,
 * so instances can be shared read-only across threads.
 */
class Graph {
 public:
  Graph() = default;

  static Graph empty(int n);
  static Graph from_edge_list(const std::vector<std::pair<int, int>>& edges,
                              int n = -1);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  const std::vector<int>& neighbors(int u) const;
  bool has_edge(int u, int v) const;
  int degree(int u) const;
  int max_degree() const;

  std::vector<std::vector<int>> components() const;
  bool is_connected() const;
  bool has_isolated_vertex() const;

  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  // Removes one edge and adds another, preserving the edge count.
  Graph rotate(Edge remove, Edge add) const;

  // perm[old] = new index; perm must be a permutation of 0..n-1.
  Graph relabeled(const std::vector<int>& perm) const;

  Graph disjoint_union(const Graph& other) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  void check_vertex(int u) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

}  // namespace qx
