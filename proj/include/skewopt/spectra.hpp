#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "skewopt/graph.hpp"
#include "skewopt/int_matrix.hpp"

namespace skewopt {

/// Skew-adjacency matrix with row/column i standing for vertex ordering[i].
IntMatrix skew_adjacency(const OrientedGraph& g, std::span<const Vertex> ordering);
IntMatrix skew_adjacency(const OrientedGraph& g);

/// Exact M^T M.
IntMatrix gram(const IntMatrix& m);

/// Exact M^k for k >= 1.
IntMatrix power(const IntMatrix& m, int k);

/// True iff S^T S == k I by integer comparison.
bool is_optimum(const OrientedGraph& g, int k);

/// Eigenvalues of a symmetric matrix in nonincreasing order, by cyclic Jacobi
/// rotations. Throws std::invalid_argument when the input is not symmetric and
/// std::runtime_error when 100 sweeps do not converge.
std::vector<double> symmetric_eigenvalues(const IntMatrix& m);
std::vector<double> symmetric_eigenvalues(std::size_t n, std::span<const double> row_major);

struct SpectralSummary {
  std::vector<double> gram_eigenvalues;  // nonincreasing, clamped at 0
  double skew_energy = 0.0;
  double upper_bound = 0.0;  // n * sqrt(max degree)
};

/// Energy from the spectrum of S^T S: the eigenvalues of S are +-i sqrt(mu).
SpectralSummary skew_energy(const OrientedGraph& g);

}  // namespace skewopt
