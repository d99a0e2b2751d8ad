#pragma once

#include <vector>

#include "core/defaults.hpp"
#include "core/graph.hpp"

namespace qx {

/**
 * Converged dominant eigenpair of the signless Laplacian Q = D + A.
 * x has unit Euclidean norm; residual is the max-norm of Q x - q x.
 * On a connected graph with n >= 2 every entry of x is strictly positive.
 */
struct PerronResult {
  double q = 0.0;
  std::vector<double> x;
  double residual = 0.0;
  long iterations = 0;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
};

// Power iteration on Q. Requires a connected graph; the positive diagonal
// makes Q primitive, so iteration from the all-ones vector converges.
// Convergence is declared when residual <= tol * q.
PerronResult perron(const Graph& g, double tol = kPerronTol,
                    long max_iter = kPerronMaxIter);

// Largest Q-eigenvalue of an arbitrary graph: max of perron over connected
// components (an isolated vertex contributes 0).
double q_index(const Graph& g, double tol = kPerronTol,
               long max_iter = kPerronMaxIter);

// Like q_index but also returns the dominant component's Perron vector,
// zero-padded to the full vertex set. Useful for rotation screening on
// possibly-disconnected graphs: x is unit-norm with x'Qx = q.
PerronResult dominant_eigenpair(const Graph& g, double tol = kPerronTol,
                                long max_iter = kPerronMaxIter);

// Full Q-spectrum by cyclic Jacobi sweeps on the dense matrix.
Spectrum spectrum_dense(const Graph& g, int ceiling = kDenseCeiling);

// max_u { d(u) + (sum of neighbor degrees) / d(u) }; an upper bound on q
// with equality exactly for regular and semiregular bipartite graphs.
double feng_bound(const Graph& g);

// Rayleigh-quotient lower bound on q(G') - q(G) for the rotation that
// removes `remove` and adds `add`: (x_a + x_b)^2 - (x_c + x_d)^2.
double rotation_delta_lower_bound(const Graph& g, Edge remove, Edge add,
                                  const PerronResult& pr);

// max_u |(q - d(u)) x_u - sum_{v in N(u)} x_v|
double eigen_equation_residual(const Graph& g, const PerronResult& pr);

// Eigenvalues of a dense symmetric matrix (row-major, n x n), descending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

}  // namespace qx
