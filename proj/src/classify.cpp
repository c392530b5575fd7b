#include "skewopt/classify.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "skewopt/search.hpp"

namespace skewopt {

namespace {

struct VertexInvariant {
  int degree;
  std::vector<int> common_counts;
  int triangles;
  friend auto operator<=>(const VertexInvariant&, const VertexInvariant&) = default;
};

std::vector<VertexInvariant> invariants(const Graph& g) {
  const int n = g.order();
  std::vector<VertexInvariant> out(n);
  for (Vertex v = 0; v < n; ++v) {
    out[v].degree = g.degree(v);
    out[v].triangles = triangle_count(g, v);
    for (Vertex w = 0; w < n; ++w)
      if (w != v) out[v].common_counts.push_back(static_cast<int>(common_neighbors(g, v, w).size()));
    std::sort(out[v].common_counts.begin(), out[v].common_counts.end());
  }
  return out;
}

// Vertices of g in BFS order over all components, so each vertex after the
// first in its component has an already-matched neighbour.
std::vector<Vertex> search_order(const Graph& g) {
  std::vector<Vertex> order;
  std::vector<bool> seen(g.order(), false);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::queue<Vertex> frontier;
    frontier.push(root);
    seen[root] = true;
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      order.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
    }
  }
  return order;
}

class Matcher {
public:
  Matcher(const Graph& g, const Graph& h)
      : g_(g), h_(h), inv_g_(invariants(g)), inv_h_(invariants(h)), order_(search_order(g)),
        map_(g.order(), -1), used_(h.order(), false) {}

  bool invariants_match() const {
    auto a = inv_g_;
    auto b = inv_h_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < h_.order(); ++w) {
      if (used_[w] || inv_g_[v] != inv_h_[w] || !consistent(depth, v, w)) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      map_[v] = -1;
    }
    return false;
  }

  const std::vector<Vertex>& mapping() const { return map_; }

private:
  bool consistent(std::size_t depth, Vertex v, Vertex w) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex x = order_[i];
      if (g_.has_edge(v, x) != h_.has_edge(w, map_[x])) return false;
    }
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<VertexInvariant> inv_g_;
  std::vector<VertexInvariant> inv_h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

Classification match_candidates(const Graph& g, const std::vector<FamilyLabel>& candidates) {
  for (const FamilyLabel& label : candidates) {
    if (auto phi = isomorphic(g, build_family(label))) return {label, std::move(*phi)};
  }
  return {};
}

}  // namespace

std::optional<std::vector<Vertex>> isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  Matcher m(g, h);
  if (!m.invariants_match() || !m.extend(0)) return std::nullopt;
  return m.mapping();
}

std::vector<FamilyLabel> candidate_members(int n) {
  std::vector<FamilyLabel> out;
  if (n == 8) out.push_back(FamilyLabel::g1());
  if (n == 6) out.push_back(FamilyLabel::g2());
  if (n == 14) out.push_back(FamilyLabel::g3());
  if (n == 16) out.push_back(FamilyLabel::q4());
  if (n >= 10 && n % 4 == 2) out.push_back(FamilyLabel::gi((n - 6) / 4));
  if (n >= 8 && n % 4 == 0) out.push_back(FamilyLabel::hj((n - 4) / 4));
  return out;
}

Classification classify(const Graph& g) {
  if (!is_regular(g, 4)) throw std::invalid_argument("classify needs a 4-regular graph");
  if (!is_connected(g)) throw std::invalid_argument("classify needs a connected graph");
  return match_candidates(g, candidate_members(g.order()));
}

Classification classify_regular(const Graph& g, int k) {
  if (k == 4) return classify(g);
  if (k < 1 || k > 4) throw std::invalid_argument("no known classification for degree " + std::to_string(k));
  if (!is_regular(g, k)) throw std::invalid_argument("graph is not " + std::to_string(k) + "-regular");
  if (!is_connected(g)) throw std::invalid_argument("classify needs a connected graph");
  std::vector<FamilyLabel> candidates;
  if (k == 1) candidates = {FamilyLabel::k2()};
  if (k == 2) candidates = {FamilyLabel::c4()};
  if (k == 3) candidates = {FamilyLabel::k4(), FamilyLabel::q3()};
  std::erase_if(candidates, [&](const FamilyLabel& l) { return family_order(l) != g.order(); });
  return match_candidates(g, candidates);
}

TheoremCheck theorem_crosscheck(const Graph& g, int k) {
  TheoremCheck check;
  check.classification = classify_regular(g, k);
  check.witness = find_optimum_orientation(g, k);
  check.consistent = check.classification.in_family() == check.witness.has_value();
  return check;
}

}  // namespace skewopt
