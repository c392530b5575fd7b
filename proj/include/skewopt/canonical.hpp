#pragma once

#include <cstdint>
#include <vector>

#include "skewopt/graph.hpp"

namespace skewopt {

/// Canonical relabeling: isomorphic graphs map to identical `graph`s.
struct CanonicalForm {
  std::vector<Vertex> labeling;  // labeling[v] = canonical label of v
  Graph graph;                   // relabel(input, labeling)
};

/// Individualization-refinement over colour-refined partitions; every leaf
/// of the search tree is examined and the lexicographically smallest
/// upper-triangle adjacency string wins. Exponential in the worst case, fine
/// for the regular graphs of census size handled here.
CanonicalForm canonical_form(const Graph& g);

/// Stable colour refinement starting from `colors`; colours are renumbered
/// 0..c-1 in an isomorphism-invariant order. Returns the number of colours.
int refine_colors(const Graph& g, std::vector<int>& colors);

}  // namespace skewopt
