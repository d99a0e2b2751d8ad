#include "core/families.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/spectral.hpp"

namespace qx {

SplusGraph construct_splus(const ExtremalParams& p) {
  if (!p.splus_feasible())
    fail(ErrorCode::infeasible,
         "S+ requires m >= 3k+3 (got m=" + std::to_string(p.m) +
             ", k=" + std::to_string(p.k) + ")");
  const int n = p.m - p.k;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(p.m);
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  for (int i = 0; i <= p.k; ++i) edges.emplace_back(2 * i + 1, 2 * i + 2);
  return SplusGraph{Graph::from_edge_list(edges, n), p};
}

std::vector<std::vector<int>> SplusGraph::partition() const {
  const int n = params.m - params.k;
  std::vector<std::vector<int>> classes;
  classes.push_back({0});
  std::vector<int> matched;
  for (int v = 1; v <= 2 * params.k + 2; ++v) matched.push_back(v);
  classes.push_back(std::move(matched));
  std::vector<int> pendants;
  for (int v = 2 * params.k + 3; v < n; ++v) pendants.push_back(v);
  if (!pendants.empty()) classes.push_back(std::move(pendants));
  return classes;
}

Graph construct_star(int m) {
  if (m < 1) fail(ErrorCode::infeasible, "star needs m >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= m; ++v) edges.emplace_back(0, v);
  return Graph::from_edge_list(edges, m + 1);
}

Graph construct_star_union_edge(int m) {
  if (m < 2) fail(ErrorCode::infeasible, "star-union-edge needs m >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= m - 1; ++v) edges.emplace_back(0, v);
  edges.emplace_back(m, m + 1);
  return Graph::from_edge_list(edges, m + 2);
}

QuotientMatrix quotient_matrix(const Graph& g,
                               const std::vector<std::vector<int>>& partition) {
  const int n = g.vertex_count();
  const int order = static_cast<int>(partition.size());
  if (order == 0) fail(ErrorCode::invalid_argument, "empty partition");

  std::vector<int> klass(n, -1);
  for (int i = 0; i < order; ++i) {
    if (partition[i].empty())
      fail(ErrorCode::invalid_argument, "partition class " + std::to_string(i) +
                                            " is empty");
    for (int v : partition[i]) {
      if (v < 0 || v >= n || klass[v] != -1)
        fail(ErrorCode::invalid_argument,
             "partition is not a disjoint cover of the vertex set");
      klass[v] = i;
    }
  }
  for (int v = 0; v < n; ++v)
    if (klass[v] == -1)
      fail(ErrorCode::invalid_argument,
           "vertex " + std::to_string(v) + " missing from partition");

  QuotientMatrix qm;
  qm.order = order;
  qm.entries.assign(order * order, 0.0);
  qm.block_sizes.reserve(order);
  for (const auto& cls : partition)
    qm.block_sizes.push_back(static_cast<int>(cls.size()));

  std::vector<long> row(order);
  for (int i = 0; i < order; ++i) {
    bool first = true;
    std::vector<long> expected(order, 0);
    int witness = -1;
    for (int u : partition[i]) {
      std::fill(row.begin(), row.end(), 0);
      row[i] += g.degree(u);  // diagonal of Q lands in u's own class
      for (int v : g.neighbors(u)) ++row[klass[v]];
      if (first) {
        expected.assign(row.begin(), row.end());
        witness = u;
        first = false;
      } else if (row != expected) {
        fail(ErrorCode::invalid_argument,
             "partition is not equitable: vertices " + std::to_string(witness) +
                 " and " + std::to_string(u) + " of class " + std::to_string(i) +
                 " have different row sums");
      }
    }
    for (int j = 0; j < order; ++j)
      qm.entries[i * order + j] = static_cast<double>(expected[j]);
  }
  return qm;
}

std::vector<double> QuotientMatrix::eigenvalues() const {
  // B is similar to the symmetric matrix S with
  // S_ij = sqrt(s_i) B_ij / sqrt(s_j), because B_ij s_i = B_ji s_j for
  // off-diagonal entries of an equitable quotient.
  std::vector<double> s(order * order, 0.0);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      s[i * order + j] = entries[i * order + j] *
                         std::sqrt(static_cast<double>(block_sizes[i])) /
                         std::sqrt(static_cast<double>(block_sizes[j]));
  return symmetric_eigenvalues(std::move(s), order);
}

QuotientMatrix splus_quotient(const ExtremalParams& p) {
  if (!p.splus_feasible())
    fail(ErrorCode::infeasible, "S+ quotient requires m >= 3k+3");
  const double m = p.m, k = p.k;
  QuotientMatrix qm;
  if (p.m == 3 * p.k + 3) {
    qm.order = 2;
    qm.entries = {m - k - 1, 2 * k + 2,  //
                  1, 3};
    qm.block_sizes = {1, 2 * p.k + 2};
  } else {
    qm.order = 3;
    qm.entries = {m - k - 1, 2 * k + 2, m - 3 * k - 3,  //
                  1, 3, 0,                              //
                  1, 0, 1};
    qm.block_sizes = {1, 2 * p.k + 2, p.m - 3 * p.k - 3};
  }
  return qm;
}

std::array<double, 4> splus_cubic(const ExtremalParams& p) {
  if (!p.cubic_feasible())
    fail(ErrorCode::infeasible,
         "cubic requires m >= 3k+4 (three nonempty classes); got m=" +
             std::to_string(p.m) + ", k=" + std::to_string(p.k));
  const double m = p.m, k = p.k;
  return {1.0, -(m - k + 3.0), 3.0 * (m - k), -4.0 * (k + 1.0)};
}

double splus_q_closed(const ExtremalParams& p) {
  auto c = splus_cubic(p);
  auto f = [&](double x) { return ((x + c[1]) * x + c[2]) * x + c[3]; };
  auto df = [&](double x) { return (3.0 * x + 2.0 * c[1]) * x + c[2]; };

  const double x0 = static_cast<double>(p.m) - p.k + 3.0;
  double x = x0;
  for (int it = 0; it < 200; ++it) {
    double fx = f(x);
    if (std::abs(fx) <= 1e-12 * x0 * x0 * x0) return x;
    double step = fx / df(x);
    x -= step;
    if (std::abs(step) < 1e-14 * x0) return x;
  }
  fail(ErrorCode::no_convergence, "Newton iteration stalled on the cubic");
}

std::pair<double, double> splus_bounds(const ExtremalParams& p) {
  if (p.m <= p.k + 1)
    fail(ErrorCode::infeasible, "bounds degenerate for m <= k+1");
  const double m = p.m, k = p.k;
  return {m - k + 1.0 / (m * m), m - k + 2.0 * (k + 1.0) / (m - k - 1.0)};
}

}  // namespace qx
