#pragma once

// Test-side reference data and slow oracles. Nothing here calls into the
// library's search, canonical-form, isomorphism or eigensolver code.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "skewopt/graph.hpp"
#include "skewopt/int_matrix.hpp"

namespace testing_support {

using skewopt::Arc;
using skewopt::Edge;
using skewopt::Graph;
using skewopt::IntMatrix;
using skewopt::OrientedGraph;
using skewopt::Vertex;

inline IntMatrix rows_to_matrix(const std::vector<std::string>& rows) {
  std::vector<std::vector<std::int64_t>> cells;
  for (const auto& r : rows) {
    std::istringstream in(r);
    std::vector<std::int64_t> row;
    for (std::int64_t x; in >> x;) row.push_back(x);
    cells.push_back(row);
  }
  IntMatrix m(static_cast<int>(cells.size()), static_cast<int>(cells[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = cells[i][j];
  return m;
}

// Optimum skew matrices as printed, rows in the fixed vertex orderings.
inline IntMatrix printed_g1() {
  return rows_to_matrix({
      "0 1 1 1 1 0 0 0",
      "-1 0 -1 1 0 1 0 0",
      "-1 1 0 -1 0 0 1 0",
      "-1 -1 1 0 0 0 0 1",
      "-1 0 0 0 0 -1 -1 -1",
      "0 -1 0 0 1 0 1 -1",
      "0 0 -1 0 1 -1 0 1",
      "0 0 0 -1 1 1 -1 0",
  });
}

inline IntMatrix printed_g2() {
  return rows_to_matrix({
      "0 1 1 1 1 0",
      "-1 0 -1 0 1 -1",
      "-1 1 0 -1 0 1",
      "-1 0 1 0 -1 -1",
      "-1 -1 0 1 0 1",
      "0 1 -1 1 -1 0",
  });
}

inline IntMatrix printed_g3() {
  return rows_to_matrix({
      "0 1 1 1 1 0 0 0 0 0 0 0 0 0",
      "-1 0 0 0 0 1 1 1 0 0 0 0 0 0",
      "-1 0 0 0 0 -1 0 0 1 1 0 0 0 0",
      "-1 0 0 0 0 0 -1 0 -1 0 1 0 0 0",
      "-1 0 0 0 0 0 0 -1 0 -1 -1 0 0 0",
      "0 -1 1 0 0 0 0 0 0 0 0 1 1 0",
      "0 -1 0 1 0 0 0 0 0 0 0 -1 0 1",
      "0 -1 0 0 1 0 0 0 0 0 0 0 -1 -1",
      "0 0 -1 1 0 0 0 0 0 0 0 0 1 -1",
      "0 0 -1 0 1 0 0 0 0 0 0 1 0 1",
      "0 0 0 -1 1 0 0 0 0 0 0 -1 1 0",
      "0 0 0 0 0 -1 1 0 0 -1 1 0 0 0",
      "0 0 0 0 0 -1 0 1 -1 0 -1 0 0 0",
      "0 0 0 0 0 0 -1 1 1 -1 0 0 0 0",
  });
}

inline IntMatrix printed_a() { return rows_to_matrix({"1 1 1 1", "1 1 -1 -1"}); }
inline IntMatrix printed_b() {
  return rows_to_matrix({"1 1 0 0", "-1 -1 0 0", "0 0 1 1", "0 0 -1 -1"});
}
inline IntMatrix printed_c() {
  return rows_to_matrix({"0 0 -1 1", "0 0 1 -1", "1 -1 0 0", "-1 1 0 0"});
}
inline IntMatrix printed_d() { return rows_to_matrix({"-1 1", "1 -1", "-1 -1", "1 1"}); }

// Direct skew matrix from the arc list, independent of skew_adjacency.
inline std::vector<std::vector<int>> naive_skew(const OrientedGraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
  for (const Arc& a : g.arcs()) {
    s[a.tail][a.head] = 1;
    s[a.head][a.tail] = -1;
  }
  return s;
}

inline bool naive_optimum(const OrientedGraph& g, int k) {
  const auto s = naive_skew(g);
  const int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int dot = 0;
      for (int r = 0; r < n; ++r) dot += s[r][i] * s[r][j];
      if (dot != (i == j ? k : 0)) return false;
    }
  return true;
}

inline OrientedGraph orientation_from_mask(const Graph& g, std::uint64_t mask) {
  std::vector<bool> forward(g.size());
  for (std::size_t e = 0; e < g.size(); ++e) forward[e] = ((mask >> e) & 1U) == 0;
  return OrientedGraph(g, forward);
}

// All 2^m orientations, no switching quotient.
inline bool brute_force_has_optimum(const Graph& g, int k) {
  const std::uint64_t total = std::uint64_t{1} << g.size();
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (naive_optimum(orientation_from_mask(g, mask), k)) return true;
  return false;
}

inline OrientedGraph random_orientation(const Graph& g, std::mt19937_64& rng) {
  std::vector<bool> forward(g.size());
  for (std::size_t e = 0; e < g.size(); ++e) forward[e] = (rng() & 1U) != 0;
  return OrientedGraph(g, forward);
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::vector<Vertex> random_subset(int n, std::mt19937_64& rng) {
  std::vector<Vertex> s;
  for (Vertex v = 0; v < n; ++v)
    if (rng() & 1U) s.push_back(v);
  return s;
}

inline bool connected(int n, const std::set<Edge>& edges) {
  if (n == 0) return true;
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (auto [a, b] : edges) comp[find(a)] = find(b);
  for (int v = 0; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

// Circulant k-regular start (needs n > k, n*k even), scrambled by random
// double-edge swaps.
inline std::set<Edge> circulant(int n, int k) {
  std::set<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int d = 1; d <= k / 2; ++d) edges.insert(std::minmax(v, (v + d) % n));
  if (k % 2 == 1)
    for (int v = 0; v < n / 2; ++v) edges.insert({v, v + n / 2});
  return edges;
}

inline bool double_swap(std::set<Edge>& edges, Edge e, Edge f, bool cross) {
  auto [a, b] = e;
  auto [c, d] = f;
  if (cross) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return false;
  const Edge x = std::minmax(a, c);
  const Edge y = std::minmax(b, d);
  if (edges.count(x) || edges.count(y)) return false;
  edges.erase(e);
  edges.erase(f);
  edges.insert(x);
  edges.insert(y);
  return true;
}

inline Graph random_regular_graph(int n, int k, std::mt19937_64& rng, bool need_connected = true) {
  for (;;) {
    std::set<Edge> edges = circulant(n, k);
    for (int step = 0; step < 20 * n; ++step) {
      std::vector<Edge> list(edges.begin(), edges.end());
      if (list.size() < 2) break;
      const Edge e = list[rng() % list.size()];
      const Edge f = list[rng() % list.size()];
      if (e != f) double_swap(edges, e, f, (rng() & 1U) != 0);
    }
    if (!need_connected || connected(n, edges)) {
      std::vector<Edge> list(edges.begin(), edges.end());
      return Graph(n, list);
    }
  }
}

// Characteristic polynomial det(xI - M) by Faddeev-LeVerrier; c[i] is the
// coefficient of x^i.
inline std::vector<mpz_class> characteristic_polynomial(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n)), mk(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
  for (int k = 1; k <= n; ++k) {
    // mk = A * (mk_prev + c[n-k+1] I), starting from mk_prev = 0
    std::vector<std::vector<mpz_class>> prev = mk;
    for (int i = 0; i < n; ++i) prev[i][i] += c[n - k + 1];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (int r = 0; r < n; ++r) s += a[i][r] * prev[r][j];
        mk[i][j] = s;
      }
    mpz_class trace = 0;
    for (int i = 0; i < n; ++i) trace += mk[i][i];
    c[n - k] = -trace / k;
  }
  return c;
}

// Number of roots greater than x = num / 2^shift, counted exactly with
// Descartes' rule on the Taylor coefficients at x (exact for real-rooted
// polynomials).
inline int roots_above(const std::vector<mpz_class>& c, const mpz_class& num, unsigned shift) {
  const int n = static_cast<int>(c.size()) - 1;
  // q(t) = 2^(shift*n) p((num + t) / 2^shift) has the same positive-root count
  // in t as p(x + t) has in t. Expand by repeated synthetic division.
  std::vector<mpz_class> q(n + 1);
  for (int i = 0; i <= n; ++i) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(shift) * (n - i));
    q[i] = c[i] * scale;
  }
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) q[j] += num * q[j + 1];
  int changes = 0;
  int last = 0;
  for (int i = n; i >= 0; --i) {
    const int s = sgn(q[i]);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  // Leading zero coefficients at t^0 mean x itself is a root; those are not above x.
  return changes;
}

// Eigenvalues of an integer symmetric matrix, nonincreasing, by bisecting
// the root count of its characteristic polynomial at dyadic points.
inline std::vector<double> bisection_eigenvalues(const IntMatrix& m, unsigned shift = 34) {
  const auto c = characteristic_polynomial(m);
  const int n = m.rows();
  std::int64_t bound = 1;
  for (int i = 0; i < n; ++i) {
    std::int64_t r = 0;
    for (int j = 0; j < n; ++j) r += std::abs(m(i, j));
    bound = std::max(bound, r + 1);
  }
  std::vector<double> out;
  for (int k = 1; k <= n; ++k) {
    // k-th largest root: smallest x with roots_above(x) < k.
    mpz_class lo = -mpz_class(bound) << shift;
    mpz_class hi = mpz_class(bound) << shift;
    while (hi - lo > 1) {
      mpz_class mid = (lo + hi) / 2;
      if (mid < lo + 1) mid = lo + 1;
      if (roots_above(c, mid, shift) < k) hi = mid;
      else lo = mid;
    }
    out.push_back(std::ldexp(hi.get_d(), -static_cast<int>(shift)));
  }
  return out;
}

// Independent census of connected k-regular graphs on n vertices: every
// k-regular graph is reachable from any other by double-edge swaps, so a
// breadth-first walk over isomorphism classes under swaps visits them all.
class SwapCensus {
public:
  SwapCensus(int n, int k) : n_(n), k_(k) {}

  // Number of isomorphism classes of connected k-regular graphs.
  int connected_classes() {
    if (k_ >= n_ || (n_ * k_) % 2 == 1) return 0;
    std::vector<std::set<Edge>> reps;
    std::vector<std::set<Edge>> frontier{circulant(n_, k_)};
    add(reps, frontier[0]);
    while (!frontier.empty()) {
      std::vector<std::set<Edge>> next;
      for (const auto& g : frontier) {
        std::vector<Edge> list(g.begin(), g.end());
        for (std::size_t i = 0; i < list.size(); ++i)
          for (std::size_t j = i + 1; j < list.size(); ++j)
            for (bool cross : {false, true}) {
              auto h = g;
              if (!double_swap(h, list[i], list[j], cross)) continue;
              if (add(reps, h)) next.push_back(h);
            }
      }
      frontier = std::move(next);
    }
    int count = 0;
    for (const auto& r : reps)
      if (connected(n_, r)) ++count;
    return count;
  }

private:
  using Adj = std::vector<std::vector<bool>>;

  Adj adjacency(const std::set<Edge>& edges) const {
    Adj a(n_, std::vector<bool>(n_, false));
    for (auto [x, y] : edges) a[x][y] = a[y][x] = true;
    return a;
  }

  // Per-vertex signature: sorted distance profile plus triangle count.
  std::vector<std::vector<int>> signatures(const Adj& a) const {
    std::vector<std::vector<int>> sig(n_);
    for (int v = 0; v < n_; ++v) {
      std::vector<int> dist(n_, -1);
      std::vector<int> queue{v};
      dist[v] = 0;
      for (std::size_t h = 0; h < queue.size(); ++h)
        for (int w = 0; w < n_; ++w)
          if (a[queue[h]][w] && dist[w] < 0) {
            dist[w] = dist[queue[h]] + 1;
            queue.push_back(w);
          }
      std::vector<int> hist(n_ + 1, 0);
      for (int d : dist) hist[d < 0 ? n_ : d]++;
      int tri = 0;
      for (int x = 0; x < n_; ++x)
        for (int y = x + 1; y < n_; ++y) tri += a[v][x] && a[v][y] && a[x][y];
      hist.push_back(tri);
      sig[v] = hist;
    }
    return sig;
  }

  bool iso(const Adj& a, const Adj& b, const std::vector<std::vector<int>>& sa,
           const std::vector<std::vector<int>>& sb) const {
    std::vector<int> map(n_, -1);
    std::vector<bool> used(n_, false);
    auto rec = [&](auto&& self, int v) -> bool {
      if (v == n_) return true;
      for (int w = 0; w < n_; ++w) {
        if (used[w] || sa[v] != sb[w]) continue;
        bool ok = true;
        for (int x = 0; x < v && ok; ++x) ok = a[v][x] == b[w][map[x]];
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (self(self, v + 1)) return true;
        used[w] = false;
      }
      return false;
    };
    return rec(rec, 0);
  }

  bool add(std::vector<std::set<Edge>>& reps, const std::set<Edge>& g) {
    const Adj a = adjacency(g);
    auto sa = signatures(a);
    auto key = sa;
    std::sort(key.begin(), key.end());
    auto& bucket = buckets_[key];
    for (std::size_t idx : bucket) {
      const Adj b = adjacency(reps[idx]);
      if (iso(a, b, sa, signatures(b))) return false;
    }
    bucket.push_back(reps.size());
    reps.push_back(g);
    return true;
  }

  int n_;
  int k_;
  std::map<std::vector<std::vector<int>>, std::vector<std::size_t>> buckets_;
};

}  // namespace testing_support
