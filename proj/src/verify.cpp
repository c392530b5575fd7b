#include "skewopt/verify.hpp"

#include <stdexcept>

#include "skewopt/spectra.hpp"

namespace skewopt {

NeighborhoodReport neighbor_parity_report(const Graph& g, ParityMode mode) {
  if (mode == ParityMode::FourRegular && !is_regular(g, 4)) {
    throw std::invalid_argument("four-regular parity mode needs a 4-regular graph");
  }
  NeighborhoodReport report;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const int common = static_cast<int>(common_neighbors(g, u, v).size());
      const bool adjacent = g.has_edge(u, v);
      bool bad = common % 2 != 0;
      if (mode == ParityMode::FourRegular) {
        bad = adjacent ? !(common == 0 || common == 2) : !(common == 0 || common == 2 || common == 4);
      }
      if (bad) report.violations.push_back({u, v, common, adjacent});
    }
  }
  return report;
}

namespace {

// Depth-first walk enumeration from `start`; visit(end, length, sign) for
// every walk of length 1..max_length.
template <typename Visit>
void enumerate_walks(const OrientedGraph& g, Vertex start, int max_length, Visit&& visit) {
  struct Frame {
    Vertex at;
    int length;
    int sign;
  };
  std::vector<Frame> stack{{start, 0, 1}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.length > 0) visit(f.at, f.length, f.sign);
    if (f.length == max_length) continue;
    for (Vertex next : g.base().neighbors(f.at)) {
      stack.push_back({next, f.length + 1, f.sign * g.sign(f.at, next)});
    }
  }
}

void check_vertex(const OrientedGraph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
}

}  // namespace

SignedWalkCount signed_walk_counts(const OrientedGraph& g, Vertex u, Vertex v, int k) {
  if (k < 1 || k > kMaxWalkLength) throw std::invalid_argument("walk length must be in 1..8");
  check_vertex(g, u);
  check_vertex(g, v);
  SignedWalkCount count;
  enumerate_walks(g, u, k, [&](Vertex end, int length, int sign) {
    if (length != k || end != v) return;
    (sign > 0 ? count.positive : count.negative) += 1;
  });
  return count;
}

bool walk_identity_holds(const OrientedGraph& g, int k_max) {
  if (k_max < 1 || k_max > kMaxWalkLength) throw std::invalid_argument("walk length must be in 1..8");
  const int n = g.order();
  const IntMatrix s = skew_adjacency(g);
  std::vector<IntMatrix> powers{s};
  for (int k = 2; k <= k_max; ++k) powers.push_back(powers.back() * s);

  for (Vertex u = 0; u < n; ++u) {
    // net[k-1][v] accumulates w+ - w- for walks u -> v of length k
    std::vector<std::vector<long long>> net(k_max, std::vector<long long>(n, 0));
    enumerate_walks(g, u, k_max, [&](Vertex end, int length, int sign) { net[length - 1][end] += sign; });
    for (int k = 1; k <= k_max; ++k)
      for (Vertex v = 0; v < n; ++v)
        if (powers[k - 1](u, v) != net[k - 1][v]) return false;
  }
  return true;
}

bool two_walk_balanced(const OrientedGraph& g) {
  const Graph& base = g.base();
  if (base.order() > 0 && !is_regular(base, base.degree(0))) {
    throw std::invalid_argument("two-walk balance needs a regular graph");
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    std::vector<long long> net(g.order(), 0);
    for (Vertex w : base.neighbors(u))
      for (Vertex v : base.neighbors(w)) net[v] += g.sign(u, w) * g.sign(w, v);
    for (Vertex v = 0; v < g.order(); ++v)
      if (v != u && net[v] != 0) return false;
  }
  return true;
}

}  // namespace skewopt
