#include "skewopt/graph.hpp"

#include <algorithm>
#include <queue>

namespace skewopt {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw ConstructionError("vertex " + std::to_string(v) +
                            " out of range for order " + std::to_string(n));
  }
}

void check_pair(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) {
    throw std::invalid_argument("vertex out of range");
  }
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw ConstructionError("negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) {
      throw ConstructionError("self-loop at vertex " + std::to_string(u));
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adj_.assign(n, {});
  adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    adjacency_[static_cast<std::size_t>(u) * n + v] = 1;
    adjacency_[static_cast<std::size_t>(v) * n + u] = 1;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int Graph::edge_index(Vertex u, Vertex v) const {
  Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

OrientedGraph::OrientedGraph(Graph base, std::vector<bool> forward)
    : base_(std::move(base)), forward_(std::move(forward)) {
  if (forward_.size() != base_.size()) {
    throw ConstructionError("orientation does not cover every edge");
  }
  index_arcs();
}

OrientedGraph::OrientedGraph(int n, std::span<const Arc> arcs) {
  std::vector<Edge> edges;
  edges.reserve(arcs.size());
  for (const Arc& a : arcs) edges.emplace_back(a.tail, a.head);
  base_ = Graph(n, edges);
  if (base_.size() != arcs.size()) {
    throw ConstructionError("edge given more than once");
  }
  forward_.assign(arcs.size(), true);
  for (const Arc& a : arcs) {
    forward_[base_.edge_index(a.tail, a.head)] = a.tail < a.head;
  }
  index_arcs();
}

void OrientedGraph::index_arcs() {
  const int n = base_.order();
  arcs_.clear();
  arcs_.reserve(base_.size());
  signs_.assign(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t e = 0; e < base_.size(); ++e) {
    auto [a, b] = base_.edges()[e];
    Arc arc = forward_[e] ? Arc{a, b} : Arc{b, a};
    arcs_.push_back(arc);
    signs_[static_cast<std::size_t>(arc.tail) * n + arc.head] = 1;
    signs_[static_cast<std::size_t>(arc.head) * n + arc.tail] = -1;
  }
}

std::vector<Arc> OrientedGraph::sorted_arcs() const {
  std::vector<Arc> out = arcs_;
  std::sort(out.begin(), out.end());
  return out;
}

Walk::Walk(const Graph& g, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("walk needs at least one vertex");
  for (Vertex v : vertices_) check_pair(g, v, v);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (!g.has_edge(vertices_[i], vertices_[i + 1])) {
      throw std::invalid_argument("consecutive walk vertices are not adjacent");
    }
  }
}

Walk Walk::reversed() const {
  Walk w;
  w.vertices_.assign(vertices_.rbegin(), vertices_.rend());
  return w;
}

int walk_sign(const OrientedGraph& g, const Walk& w) {
  int s = 1;
  const auto& vs = w.vertices();
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) s *= g.sign(vs[i], vs[i + 1]);
  return s;
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  if (u == v) throw std::invalid_argument("common_neighbors needs distinct vertices");
  std::vector<Vertex> out;
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_regular(const Graph& g, int k) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

int triangle_count(const Graph& g, Vertex v) {
  int count = 0;
  const auto& nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (g.has_edge(nb[i], nb[j])) ++count;
    }
  }
  return count;
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (!common_neighbors(g, u, v).empty()) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

OrientedGraph disjoint_union(const OrientedGraph& g1, const OrientedGraph& g2) {
  const int shift = g1.order();
  std::vector<Arc> arcs = g1.arcs();
  for (const Arc& a : g2.arcs()) arcs.push_back({a.tail + shift, a.head + shift});
  return OrientedGraph(g1.order() + g2.order(), arcs);
}

OrientedGraph switch_at(const OrientedGraph& g, std::span<const Vertex> subset) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : subset) {
    check_pair(g.base(), v, v);
    in[v] = true;
  }
  std::vector<bool> forward = g.forward_flags();
  for (std::size_t e = 0; e < forward.size(); ++e) {
    auto [a, b] = g.base().edges()[e];
    if (in[a] != in[b]) forward[e] = !forward[e];
  }
  return OrientedGraph(g.base(), std::move(forward));
}

namespace {

void check_permutation(int n, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> hit(n, false);
  for (Vertex v : perm) {
    if (v < 0 || v >= n || hit[v]) throw std::invalid_argument("not a permutation");
    hit[v] = true;
  }
}

}  // namespace

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  check_permutation(g.order(), perm);
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

OrientedGraph relabel(const OrientedGraph& g, std::span<const Vertex> perm) {
  check_permutation(g.order(), perm);
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  return OrientedGraph(g.order(), arcs);
}

}  // namespace skewopt
