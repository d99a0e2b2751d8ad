#include "core/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"

namespace qx {

namespace {

// y = Q x restricted to the vertices of one component (or all).
void apply_q(const Graph& g, const std::vector<double>& x,
             std::vector<double>& y) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    double acc = static_cast<double>(g.degree(u)) * x[u];
    for (int v : g.neighbors(u)) acc += x[v];
    y[u] = acc;
  }
}

double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

PerronResult perron(const Graph& g, double tol, long max_iter) {
  const int n = g.vertex_count();
  if (n < 1) fail(ErrorCode::invalid_argument, "perron requires n >= 1");
  if (!g.is_connected())
    fail(ErrorCode::invalid_argument,
         "perron requires a connected graph; use q_index for general inputs");

  PerronResult result;
  if (n == 1) {
    result.x = {1.0};
    return result;
  }

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n, 0.0);
  for (long it = 1; it <= max_iter; ++it) {
    apply_q(g, x, y);
    double q = 0.0;
    for (int u = 0; u < n; ++u) q += x[u] * y[u];  // Rayleigh quotient
    double res = 0.0;
    for (int u = 0; u < n; ++u) res = std::max(res, std::abs(y[u] - q * x[u]));
    if (res <= tol * q) {
      result.q = q;
      result.x = x;
      result.residual = res;
      result.iterations = it;
      return result;
    }
    double scale = 1.0 / norm2(y);
    for (int u = 0; u < n; ++u) x[u] = y[u] * scale;
  }
  fail(ErrorCode::no_convergence,
       "power iteration did not reach residual " + std::to_string(tol) +
           "*q in " + std::to_string(max_iter) + " iterations");
}

PerronResult dominant_eigenpair(const Graph& g, double tol, long max_iter) {
  const int n = g.vertex_count();
  PerronResult best;
  best.x.assign(n, 0.0);
  if (n == 0) return best;

  auto comps = g.components();
  if (comps.size() == 1) return perron(g, tol, max_iter);

  bool have = false;
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      if (!have) {
        have = true;
        best.q = 0.0;
        best.x.assign(n, 0.0);
        best.x[comp[0]] = 1.0;
      }
      continue;
    }
    // Re-solve on the induced component with compact labels.
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : comp)
      for (int v : g.neighbors(u))
        if (u < v) edges.emplace_back(local[u], local[v]);
    PerronResult sub = perron(
        Graph::from_edge_list(edges, static_cast<int>(comp.size())), tol, max_iter);
    if (!have || sub.q > best.q) {
      have = true;
      best.q = sub.q;
      best.residual = sub.residual;
      best.iterations = sub.iterations;
      best.x.assign(n, 0.0);
      for (std::size_t i = 0; i < comp.size(); ++i) best.x[comp[i]] = sub.x[i];
    }
  }
  return best;
}

double q_index(const Graph& g, double tol, long max_iter) {
  if (g.vertex_count() == 0) return 0.0;
  return dominant_eigenpair(g, tol, max_iter).q;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
  if (n == 0) return {};
  auto at = [&](int i, int j) -> double& { return a[i * n + j]; };

  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return std::vector<double>(n, 0.0);
  const double threshold = 1e-14 * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (std::abs(apq) <= threshold) continue;
        rotated = true;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double tau = s / (1.0 + c);

        double app = at(p, p), aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          double arp = at(r, p), arq = at(r, q);
          at(r, p) = arp - s * (arq + tau * arp);
          at(p, r) = at(r, p);
          at(r, q) = arq + s * (arp - tau * arq);
          at(q, r) = at(r, q);
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> eigs(n);
  for (int i = 0; i < n; ++i) eigs[i] = at(i, i);
  std::sort(eigs.begin(), eigs.end(), std::greater<double>());
  return eigs;
}

Spectrum spectrum_dense(const Graph& g, int ceiling) {
  const int n = g.vertex_count();
  if (n > ceiling)
    fail(ErrorCode::limit, "dense spectrum limited to n <= " +
                               std::to_string(ceiling) + " (got n=" +
                               std::to_string(n) + ")");
  std::vector<double> q(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u) {
    q[u * n + u] = g.degree(u);
    for (int v : g.neighbors(u)) q[u * n + v] = 1.0;
  }
  return Spectrum{symmetric_eigenvalues(std::move(q), n)};
}

double feng_bound(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) fail(ErrorCode::invalid_argument, "feng bound of empty graph");
  double best = 0.0;
  for (int u = 0; u < n; ++u) {
    int d = g.degree(u);
    if (d == 0)
      fail(ErrorCode::invalid_argument,
           "feng bound requires minimum degree >= 1 (vertex " +
               std::to_string(u) + " is isolated)");
    long sum = 0;
    for (int v : g.neighbors(u)) sum += g.degree(v);
    best = std::max(best, d + static_cast<double>(sum) / d);
  }
  return best;
}

double rotation_delta_lower_bound(const Graph& g, Edge remove, Edge add,
                                  const PerronResult& pr) {
  if (static_cast<int>(pr.x.size()) != g.vertex_count())
    fail(ErrorCode::invalid_argument, "Perron vector size mismatch");
  double norm = norm2(pr.x);
  if (std::abs(norm - 1.0) > 1e-9)
    fail(ErrorCode::invalid_argument, "Perron vector is not unit norm");
  if (!g.has_edge(remove.u, remove.v))
    fail(ErrorCode::invalid_argument, "rotation removes a non-edge");
  if (add.u == add.v) fail(ErrorCode::invalid_argument, "rotation adds a loop");
  if (g.has_edge(add.u, add.v))
    fail(ErrorCode::invalid_argument, "rotation adds an existing edge");

  double gain = pr.x[add.u] + pr.x[add.v];
  double loss = pr.x[remove.u] + pr.x[remove.v];
  return gain * gain - loss * loss;
}

double eigen_equation_residual(const Graph& g, const PerronResult& pr) {
  if (static_cast<int>(pr.x.size()) != g.vertex_count())
    fail(ErrorCode::invalid_argument, "Perron vector size mismatch");
  double worst = 0.0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    double lhs = (pr.q - g.degree(u)) * pr.x[u];
    double rhs = 0.0;
    for (int v : g.neighbors(u)) rhs += pr.x[v];
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace qx
