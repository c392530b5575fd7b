#include "skewopt/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace skewopt {

IntMatrix skew_adjacency(const OrientedGraph& g, std::span<const Vertex> ordering) {
  const int n = g.order();
  if (static_cast<int>(ordering.size()) != n) throw std::invalid_argument("ordering size mismatch");
  std::vector<int> row_of(n, -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = ordering[i];
    if (v < 0 || v >= n || row_of[v] != -1) throw std::invalid_argument("ordering is not a permutation");
    row_of[v] = i;
  }
  IntMatrix m(n, n);
  for (const Arc& a : g.arcs()) {
    m(row_of[a.tail], row_of[a.head]) = 1;
    m(row_of[a.head], row_of[a.tail]) = -1;
  }
  return m;
}

IntMatrix skew_adjacency(const OrientedGraph& g) {
  std::vector<Vertex> identity(g.order());
  std::iota(identity.begin(), identity.end(), 0);
  return skew_adjacency(g, identity);
}

IntMatrix gram(const IntMatrix& m) { return m.transpose() * m; }

IntMatrix power(const IntMatrix& m, int k) {
  if (!m.square()) throw std::invalid_argument("power needs a square matrix");
  if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
  IntMatrix result = m;
  for (int i = 1; i < k; ++i) result = result * m;
  return result;
}

bool is_optimum(const OrientedGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return gram(skew_adjacency(g)).is_scalar_identity(k);
}

std::vector<double> symmetric_eigenvalues(std::size_t n, std::span<const double> row_major) {
  if (row_major.size() != n * n) throw std::invalid_argument("matrix data size mismatch");
  std::vector<double> a(row_major.begin(), row_major.end());
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };

  double norm2 = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (at(r, c) != at(c, r)) throw std::invalid_argument("matrix is not symmetric");
      norm2 += at(r, c) * at(r, c);
    }
  }
  const double tolerance = 1e-12 * std::sqrt(norm2);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c) s += at(r, c) * at(r, c);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_norm() > tolerance) {
    if (sweep++ == kMaxSweeps) throw std::runtime_error("Jacobi iteration did not converge in 100 sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Rotation angle chosen so the (p,q) entry vanishes; the smaller root
        // of t^2 + 2 theta t - 1 = 0 keeps |angle| <= pi/4.
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<double> symmetric_eigenvalues(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<double> data(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) data[r * n + c] = static_cast<double>(m(r, c));
  return symmetric_eigenvalues(n, data);
}

SpectralSummary skew_energy(const OrientedGraph& g) {
  SpectralSummary summary;
  summary.gram_eigenvalues = symmetric_eigenvalues(gram(skew_adjacency(g)));
  for (double& mu : summary.gram_eigenvalues) {
    if (mu < 0.0) {
      if (mu < -1e-10) throw std::runtime_error("Gram matrix has a negative eigenvalue");
      mu = 0.0;
    }
    summary.skew_energy += std::sqrt(mu);
  }
  summary.upper_bound = g.order() * std::sqrt(static_cast<double>(g.base().max_degree()));
  return summary;
}

}  // namespace skewopt
