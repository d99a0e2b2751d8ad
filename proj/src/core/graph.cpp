#include "core/graph.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace qx {

Graph Graph::empty(int n) {
  if (n < 0) fail(ErrorCode::invalid_argument, "vertex count must be >= 0");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  return g;
}

Graph Graph::from_edge_list(const std::vector<std::pair<int, int>>& edges,
                            int n) {
  int required = 0;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0)
      fail(ErrorCode::invalid_argument, "negative vertex index");
    required = std::max(required, std::max(u, v) + 1);
  }
  if (n < 0) n = required;
  if (required > n)
    fail(ErrorCode::invalid_argument,
         "vertex index out of range: edge endpoint " +
             std::to_string(required - 1) + " with n=" + std::to_string(n));

  Graph g = Graph::empty(n);
  for (const auto& [u, v] : edges) {
    if (u == v)
      fail(ErrorCode::invalid_argument,
           "loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (g.has_edge(u, v))
      fail(ErrorCode::invalid_argument,
           "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) +
               ")");
    auto& nu = g.adj_[u];
    auto& nv = g.adj_[v];
    nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++g.m_;
  }
  return g;
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_)
    fail(ErrorCode::invalid_argument,
         "vertex " + std::to_string(u) + " out of range (n=" +
             std::to_string(n_) + ")");
}

const std::vector<int>& Graph::neighbors(int u) const {
  check_vertex(u);
  return adj_[u];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& nu = adj_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::degree(int u) const {
  check_vertex(u);
  return static_cast<int>(adj_[u].size());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adj_)
    best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : adj_[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  return components().size() == 1;
}

bool Graph::has_isolated_vertex() const {
  for (const auto& nbrs : adj_)
    if (nbrs.empty()) return true;
  return false;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) result.emplace_back(u, v);
  return result;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(ErrorCode::invalid_argument, "cannot add a loop");
  if (has_edge(u, v)) fail(ErrorCode::invalid_argument, "edge already present");
  Graph g = *this;
  auto& nu = g.adj_[u];
  auto& nv = g.adj_[v];
  nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++g.m_;
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (!has_edge(u, v))
    fail(ErrorCode::invalid_argument, "cannot remove a non-edge");
  Graph g = *this;
  auto& nu = g.adj_[u];
  auto& nv = g.adj_[v];
  nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --g.m_;
  return g;
}

Graph Graph::rotate(Edge remove, Edge add) const {
  if (add == remove)
    fail(ErrorCode::invalid_argument, "rotation must change the edge set");
  return without_edge(remove.u, remove.v).with_edge(add.u, add.v);
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    fail(ErrorCode::invalid_argument, "permutation size mismatch");
  std::vector<char> hit(n_, 0);
  for (int p : perm) {
    if (p < 0 || p >= n_ || hit[p])
      fail(ErrorCode::invalid_argument, "not a permutation");
    hit[p] = 1;
  }
  Graph g = Graph::empty(n_);
  g.m_ = m_;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u]) g.adj_[perm[u]].push_back(perm[v]);
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph g = Graph::empty(n_ + other.n_);
  g.m_ = m_ + other.m_;
  for (int u = 0; u < n_; ++u) g.adj_[u] = adj_[u];
  for (int u = 0; u < other.n_; ++u) {
    auto& nbrs = g.adj_[n_ + u];
    nbrs.reserve(other.adj_[u].size());
    for (int v : other.adj_[u]) nbrs.push_back(n_ + v);
  }
  return g;
}

}  // namespace qx
