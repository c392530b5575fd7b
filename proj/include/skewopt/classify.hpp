#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewopt/families.hpp"
#include "skewopt/graph.hpp"

namespace skewopt {

/// A bijection phi with uv in E(g) iff phi(u)phi(v) in E(h), or nullopt.
/// Vertices are matched on (degree, sorted common-neighbour counts, triangle
/// count) before backtracking.
std::optional<std::vector<Vertex>> isomorphic(const Graph& g, const Graph& h);

/// Members of F with the given order, in the fixed order G1, G2, G3, Q4,
/// GI(i), HJ(j).
std::vector<FamilyLabel> candidate_members(int n);

struct Classification {
  std::optional<FamilyLabel> label;  // nullopt: not in the family
  std::vector<Vertex> certificate;   // isomorphism onto build_family(*label)

  bool in_family() const { return label.has_value(); }
  std::string name() const { return label ? label->name() : "NotInFamily"; }
};

/// Membership of a connected 4-regular graph in F; std::invalid_argument for
/// anything else.
Classification classify(const Graph& g);

/// Like classify, for degree k in 1..4. Degree 1..3 candidates are K2, C4,
/// K4 and Q3. Degrees outside 1..4 throw std::invalid_argument.
Classification classify_regular(const Graph& g, int k);

struct TheoremCheck {
  Classification classification;
  std::optional<OrientedGraph> witness;  // optimum orientation, when one exists
  bool consistent = false;               // in family <=> optimum orientation exists
};

/// Runs classification and the exhaustive orientation search side by side on
/// a connected k-regular graph (k = 4 unless given).
TheoremCheck theorem_crosscheck(const Graph& g, int k = 4);

}  // namespace skewopt
