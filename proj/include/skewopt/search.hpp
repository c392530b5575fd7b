#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewopt/graph.hpp"

namespace skewopt {

/// Representatives of the switching classes of orientations of a connected
/// graph. Edges of the BFS tree rooted at 0 (children in ascending order) are
/// oriented parent -> child; the remaining "free" edges, sorted
/// lexicographically, take their direction from the bits of an assignment
/// (bit b belongs to free edge b; 0 means smaller -> larger endpoint).
/// Every orientation is switching-equivalent to exactly one representative.
class SwitchingClassIndex {
public:
  /// Throws std::invalid_argument for a disconnected graph or one with 64 or
  /// more free edges.
  explicit SwitchingClassIndex(const Graph& g);

  const Graph& graph() const { return graph_; }
  const std::vector<Arc>& tree_arcs() const { return tree_arcs_; }
  const std::vector<Edge>& free_edges() const { return free_edges_; }

  /// 2^(m - n + 1).
  std::uint64_t count() const { return std::uint64_t{1} << free_edges_.size(); }

  OrientedGraph orientation(std::uint64_t assignment) const;

  /// Vertex set whose switch maps `g` onto its class representative.
  std::vector<Vertex> normalizing_switch(const OrientedGraph& g) const;

  /// Assignment of the representative switching-equivalent to `g`.
  std::uint64_t class_of(const OrientedGraph& g) const;

private:
  Graph graph_;
  std::vector<Vertex> parent_;  // -1 at the root
  std::vector<Vertex> bfs_order_;
  std::vector<Arc> tree_arcs_;
  std::vector<Edge> free_edges_;
};

/// All class representatives in ascending assignment order. Throws
/// std::invalid_argument when there are more than 2^24 classes.
std::vector<OrientedGraph> switching_classes(const Graph& g);

/// The first class representative (ascending assignment) with S^T S = kI, or
/// nullopt. Graphs failing the common-neighbourhood parity filter are rejected
/// before any enumeration. The result does not depend on `workers`.
/// Throws std::invalid_argument unless g is connected and k-regular.
std::optional<OrientedGraph> find_optimum_orientation(const Graph& g, int k, int workers = 1);

/// Largest order the built-in enumerator accepts for degree k.
int enumeration_cap(int k);

/// One canonical representative per isomorphism class of connected k-regular
/// graphs on n vertices, sorted by canonical encoding. Vertices are labelled
/// in discovery order while edges are added; complete graphs are then reduced
/// by canonical form. Throws std::invalid_argument when n exceeds
/// enumeration_cap(k) (larger censuses should read a graph6 corpus).
std::vector<Graph> enumerate_connected_k_regular(int n, int k);

}  // namespace skewopt
