#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewopt {

using Vertex = int;

/// Unordered edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when an object cannot be built from its inputs (self-loops,
/// out-of-range endpoints, or an internal post-construction check failing).
class ConstructionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
  Graph() = default;

  /// Duplicate pairs (in either order) collapse into one edge.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  /// Sorted lexicographically, each with first < second.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  bool has_edge(Vertex u, Vertex v) const {
    return u != v && adjacency_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  /// Position of {u,v} in edges(), or -1 when absent.
  int edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> adjacency_;
};

Graph build_graph(int n, std::span<const Edge> edges);

/// Arc tail -> head.
struct Arc {
  Vertex tail;
  Vertex head;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A Graph together with one direction per edge.
class OrientedGraph {
public:
  OrientedGraph() = default;

  /// forward[e] == true orients edges()[e] from its smaller endpoint.
  OrientedGraph(Graph base, std::vector<bool> forward);

  /// Builds the underlying graph from the arcs. An edge given in both
  /// directions, a self-loop, or an endpoint >= n is a ConstructionError.
  OrientedGraph(int n, std::span<const Arc> arcs);

  const Graph& base() const { return base_; }
  int order() const { return base_.order(); }

  /// One arc per edge, in the order of base().edges().
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Arcs sorted by (tail, head).
  std::vector<Arc> sorted_arcs() const;

  bool forward(std::size_t edge) const { return forward_[edge]; }
  const std::vector<bool>& forward_flags() const { return forward_; }

  /// s_uv: +1 for arc u->v, -1 for arc v->u, 0 when not adjacent.
  int sign(Vertex u, Vertex v) const {
    return signs_[static_cast<std::size_t>(u) * order() + v];
  }

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.base_ == b.base_ && a.forward_ == b.forward_;
  }

private:
  void index_arcs();

  Graph base_;
  std::vector<bool> forward_;
  std::vector<Arc> arcs_;
  std::vector<std::int8_t> signs_;
};

/// Walk u_1 u_2 ... u_k in the underlying graph; repeated vertices allowed.
class Walk {
public:
  Walk(const Graph& g, std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()) - 1; }
  Walk reversed() const;

private:
  Walk() = default;
  std::vector<Vertex> vertices_;
};

/// Product of s_{u_i u_{i+1}} along the walk.
int walk_sign(const OrientedGraph& g, const Walk& w);

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v);
bool is_regular(const Graph& g, int k);
bool is_triangle_free(const Graph& g);
bool is_connected(const Graph& g);
int triangle_count(const Graph& g, Vertex v);

/// G2's vertices are shifted by G1's order.
OrientedGraph disjoint_union(const OrientedGraph& g1, const OrientedGraph& g2);

/// Reverses every arc with exactly one endpoint in `subset`.
OrientedGraph switch_at(const OrientedGraph& g, std::span<const Vertex> subset);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);
OrientedGraph relabel(const OrientedGraph& g, std::span<const Vertex> perm);

}  // namespace skewopt
