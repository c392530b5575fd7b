#pragma once

#include <vector>

#include "skewopt/graph.hpp"

namespace skewopt {

enum class ParityMode {
  GeneralEven,  // every pair of distinct vertices has an even common neighbourhood
  FourRegular,  // adjacent pairs share 0 or 2 neighbours, non-adjacent 0, 2 or 4
};

struct NeighborhoodViolation {
  Vertex u;
  Vertex v;
  int common;
  bool adjacent;
  friend bool operator==(const NeighborhoodViolation&, const NeighborhoodViolation&) = default;
};

struct NeighborhoodReport {
  std::vector<NeighborhoodViolation> violations;  // u < v, lexicographic
  bool passed() const { return violations.empty(); }
};

/// Necessary conditions on the underlying graph of an optimum orientation.
/// All violating pairs are reported. FourRegular mode on a graph that is not
/// 4-regular throws std::invalid_argument.
NeighborhoodReport neighbor_parity_report(const Graph& g, ParityMode mode);

struct SignedWalkCount {
  long long positive = 0;
  long long negative = 0;
};

constexpr int kMaxWalkLength = 8;

/// Counts u -> v walks of length k by their sign, enumerating every walk
/// explicitly. k must lie in 1..8.
SignedWalkCount signed_walk_counts(const OrientedGraph& g, Vertex u, Vertex v, int k);

/// Checks (S^k)_{uv} == w+ - w- for every ordered pair and 1 <= k <= k_max,
/// with the right-hand side from walk enumeration.
bool walk_identity_holds(const OrientedGraph& g, int k_max);

/// True iff every ordered pair of distinct vertices has as many positive as
/// negative 2-walks. Equivalent to S^T S = kI on k-regular graphs; throws
/// std::invalid_argument on irregular input.
bool two_walk_balanced(const OrientedGraph& g);

}  // namespace skewopt
