#include "skewopt/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <queue>
#include <stdexcept>
#include <thread>

#include "skewopt/canonical.hpp"
#include "skewopt/formats.hpp"
#include "skewopt/verify.hpp"

namespace skewopt {

SwitchingClassIndex::SwitchingClassIndex(const Graph& g) : graph_(g) {
  if (!is_connected(g)) throw std::invalid_argument("switching classes need a connected graph");
  const int n = g.order();
  parent_.assign(n, -1);
  if (n == 0) return;

  std::vector<bool> seen(n, false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::vector<bool> tree_edge(g.size(), false);
  while (!frontier.empty()) {
    const Vertex p = frontier.front();
    frontier.pop();
    bfs_order_.push_back(p);
    for (Vertex c : g.neighbors(p)) {
      if (seen[c]) continue;
      seen[c] = true;
      parent_[c] = p;
      tree_arcs_.push_back({p, c});
      tree_edge[g.edge_index(p, c)] = true;
      frontier.push(c);
    }
  }
  for (std::size_t e = 0; e < g.size(); ++e)
    if (!tree_edge[e]) free_edges_.push_back(g.edges()[e]);
  if (free_edges_.size() >= 64) throw std::invalid_argument("too many free edges to index switching classes");
}

OrientedGraph SwitchingClassIndex::orientation(std::uint64_t assignment) const {
  if (assignment >= count()) throw std::invalid_argument("assignment out of range");
  std::vector<bool> forward(graph_.size(), true);
  for (const Arc& a : tree_arcs_) forward[graph_.edge_index(a.tail, a.head)] = a.tail < a.head;
  for (std::size_t b = 0; b < free_edges_.size(); ++b) {
    const auto [u, v] = free_edges_[b];
    forward[graph_.edge_index(u, v)] = ((assignment >> b) & 1) == 0;
  }
  return OrientedGraph(graph_, std::move(forward));
}

std::vector<Vertex> SwitchingClassIndex::normalizing_switch(const OrientedGraph& g) const {
  if (!(g.base() == graph_)) throw std::invalid_argument("orientation of a different graph");
  std::vector<bool> in(graph_.order(), false);
  std::vector<Vertex> subset;
  for (Vertex c : bfs_order_) {
    const Vertex p = parent_[c];
    if (p < 0) continue;
    // The tree arc flips exactly when one endpoint is switched.
    in[c] = in[p] != (g.sign(p, c) < 0);
    if (in[c]) subset.push_back(c);
  }
  return subset;
}

std::uint64_t SwitchingClassIndex::class_of(const OrientedGraph& g) const {
  const OrientedGraph normal = switch_at(g, normalizing_switch(g));
  std::uint64_t assignment = 0;
  for (std::size_t b = 0; b < free_edges_.size(); ++b) {
    const auto [u, v] = free_edges_[b];
    if (normal.sign(u, v) < 0) assignment |= std::uint64_t{1} << b;
  }
  return assignment;
}

std::vector<OrientedGraph> switching_classes(const Graph& g) {
  SwitchingClassIndex index(g);
  if (index.count() > (std::uint64_t{1} << 24)) throw std::invalid_argument("too many switching classes to list");
  std::vector<OrientedGraph> out;
  out.reserve(index.count());
  for (std::uint64_t a = 0; a < index.count(); ++a) out.push_back(index.orientation(a));
  return out;
}

namespace {

// Orthogonality constraints of distinct rows of S: for u < v with common
// neighbours W, sum over w in W of s_uw * s_wv must vanish. A constraint is
// checked as soon as the lowest-indexed free edge it involves is assigned;
// the search assigns free edges from the highest index down, which visits
// assignments in ascending numeric order.
struct RowConstraint {
  Vertex u;
  Vertex v;
  std::vector<Vertex> middle;
};

class OptimumSearch {
public:
  explicit OptimumSearch(const SwitchingClassIndex& index) : index_(index) {
    const Graph& g = index.graph();
    const int n = g.order();
    free_of_edge_.assign(g.size(), -1);
    for (std::size_t b = 0; b < index.free_edges().size(); ++b) {
      const auto [u, v] = index.free_edges()[b];
      free_of_edge_[g.edge_index(u, v)] = static_cast<int>(b);
    }
    base_signs_.assign(static_cast<std::size_t>(n) * n, 0);
    for (const Arc& a : index.tree_arcs()) {
      base_signs_[idx(a.tail, a.head)] = 1;
      base_signs_[idx(a.head, a.tail)] = -1;
    }
    const int free_count = static_cast<int>(index.free_edges().size());
    by_level_.assign(free_count, {});
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        RowConstraint c{u, v, common_neighbors(g, u, v)};
        if (c.middle.empty()) continue;
        int level = free_count;
        for (Vertex w : c.middle) {
          for (int e : {g.edge_index(u, w), g.edge_index(w, v)}) {
            if (free_of_edge_[e] >= 0) level = std::min(level, free_of_edge_[e]);
          }
        }
        (level == free_count ? fixed_ : by_level_[level]).push_back(std::move(c));
      }
    }
  }

  int free_count() const { return static_cast<int>(by_level_.size()); }

  // Smallest satisfying assignment whose top `prefix_bits` bits equal
  // `prefix`, if any.
  std::optional<std::uint64_t> solve(int prefix_bits, std::uint64_t prefix) const {
    std::vector<std::int8_t> signs = base_signs_;
    if (!holds(signs, fixed_)) return std::nullopt;
    const int f = free_count();
    std::uint64_t assignment = 0;
    for (int i = 0; i < prefix_bits; ++i) {
      const int bit = f - prefix_bits + i;
      const bool value = (prefix >> i) & 1;
      set_free(signs, bit, value);
      if (value) assignment |= std::uint64_t{1} << bit;
    }
    for (int bit = f - prefix_bits; bit < f; ++bit)
      if (!holds(signs, by_level_[bit])) return std::nullopt;
    if (dfs(signs, f - prefix_bits - 1, assignment)) return assignment;
    return std::nullopt;
  }

private:
  std::size_t idx(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * index_.graph().order() + b;
  }

  void set_free(std::vector<std::int8_t>& signs, int bit, bool reversed) const {
    const auto [u, v] = index_.free_edges()[bit];
    signs[idx(u, v)] = reversed ? -1 : 1;
    signs[idx(v, u)] = reversed ? 1 : -1;
  }

  bool holds(const std::vector<std::int8_t>& signs, const std::vector<RowConstraint>& cs) const {
    for (const auto& c : cs) {
      int sum = 0;
      for (Vertex w : c.middle) sum += signs[idx(c.u, w)] * signs[idx(w, c.v)];
      if (sum != 0) return false;
    }
    return true;
  }

  bool dfs(std::vector<std::int8_t>& signs, int bit, std::uint64_t& assignment) const {
    if (bit < 0) return true;
    for (bool value : {false, true}) {
      set_free(signs, bit, value);
      if (value) {
        assignment |= std::uint64_t{1} << bit;
      } else {
        assignment &= ~(std::uint64_t{1} << bit);
      }
      if (holds(signs, by_level_[bit]) && dfs(signs, bit - 1, assignment)) return true;
    }
    assignment &= ~(std::uint64_t{1} << bit);
    return false;
  }

  const SwitchingClassIndex& index_;
  std::vector<int> free_of_edge_;
  std::vector<std::int8_t> base_signs_;
  std::vector<RowConstraint> fixed_;
  std::vector<std::vector<RowConstraint>> by_level_;
};

}  // namespace

std::optional<OrientedGraph> find_optimum_orientation(const Graph& g, int k, int workers) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (workers < 1) throw std::invalid_argument("worker count must be >= 1");
  if (!is_regular(g, k)) throw std::invalid_argument("graph is not " + std::to_string(k) + "-regular");
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");

  if (!neighbor_parity_report(g, ParityMode::GeneralEven).passed()) return std::nullopt;
  if (k == 4 && !neighbor_parity_report(g, ParityMode::FourRegular).passed()) return std::nullopt;

  SwitchingClassIndex index(g);
  OptimumSearch search(index);

  int prefix_bits = 0;
  if (workers > 1) {
    while ((1 << prefix_bits) < 4 * workers && prefix_bits < search.free_count() && prefix_bits < 16) ++prefix_bits;
  }
  const std::uint64_t tasks = std::uint64_t{1} << prefix_bits;
  std::vector<std::optional<std::uint64_t>> found(tasks);
  std::atomic<std::uint64_t> next_task{0};
  std::atomic<std::uint64_t> best_task{tasks};

  auto worker = [&] {
    while (true) {
      const std::uint64_t t = next_task.fetch_add(1);
      if (t >= tasks || t > best_task.load()) return;
      found[t] = search.solve(prefix_bits, t);
      if (found[t]) {
        std::uint64_t current = best_task.load();
        while (t < current && !best_task.compare_exchange_weak(current, t)) {
        }
      }
    }
  };
  if (workers == 1 || tasks == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& a : found)
    if (a) return index.orientation(*a);
  return std::nullopt;
}

int enumeration_cap(int k) {
  if (k <= 2) return 32;
  if (k == 3) return 14;
  if (k == 4) return 12;
  return 10;
}

namespace {

// Builds k-regular graphs vertex by vertex. Vertex v is completed from the
// already-discovered vertices above it plus a block of fresh vertices, which
// always take the next unused labels; fresh vertices are interchangeable, so
// only their count matters. A vertex reached before it was discovered means
// the graph is disconnected.
//
// The rows written this way form a discovery code: for each vertex in label
// order, the number of fresh neighbours and the later discovered neighbours.
// Every discovery process on a graph (any root, any order of each fresh
// block) yields a code, and only the smallest one is kept. A partial graph
// whose completed rows are beaten by another process on those same rows
// cannot lead to a smallest code and is abandoned.
class RegularGenerator {
public:
  RegularGenerator(int n, int k) : n_(n), k_(k), adj_(n, 0), degree_(n, 0), rows_(n) {}

  std::vector<Graph> run() {
    discovered_ = 1;
    complete(0);
    std::vector<Graph> out;
    out.reserve(found_.size());
    for (auto& [code, g] : found_) out.push_back(std::move(g));
    return out;
  }

private:
  using Row = std::vector<int>;  // fresh count, then later discovered labels ascending

  void complete(Vertex v) {
    if (v == n_) {
      record();
      return;
    }
    if (v >= discovered_) return;
    const int need = k_ - degree_[v];
    std::vector<Vertex> candidates;
    for (Vertex w = v + 1; w < discovered_; ++w)
      if (degree_[w] < k_ && !(adj_[v] >> w & 1)) candidates.push_back(w);
    std::vector<Vertex> chosen;
    choose(v, need, candidates, 0, chosen);
  }

  void choose(Vertex v, int need, const std::vector<Vertex>& candidates, std::size_t from,
              std::vector<Vertex>& chosen) {
    const int fresh = need - static_cast<int>(chosen.size());
    if (fresh <= n_ - discovered_) {
      const int first_fresh = discovered_;
      Row& row = rows_[v];
      row.assign(1, fresh);
      for (Vertex w : chosen) row.push_back(w);
      std::sort(row.begin() + 1, row.end());
      for (int i = 0; i < fresh; ++i) chosen.push_back(first_fresh + i);
      discovered_ += fresh;
      for (Vertex w : chosen) connect(v, w);
      if (minimal_prefix(v)) complete(v + 1);
      for (Vertex w : chosen) disconnect(v, w);
      discovered_ -= fresh;
      chosen.resize(chosen.size() - fresh);
    }
    if (fresh == 0) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      choose(v, need, candidates, i + 1, chosen);
      chosen.pop_back();
    }
  }

  // False when some discovery process over the completed rows 0..last
  // produces a smaller code prefix than the current labels do.
  bool minimal_prefix(Vertex last) {
    last_ = last;
    std::vector<int> label(n_, -1);
    std::vector<Vertex> at(n_, -1);
    for (Vertex root = 0; root <= last; ++root) {
      label[root] = 0;
      at[0] = root;
      const bool smaller = explore(0, 1, label, at);
      label[root] = -1;
      at[0] = -1;
      if (smaller) return false;
    }
    return true;
  }

  // Continues a discovery process at position pos; true when it beats the
  // current code. Positions beyond the completed rows are not comparable.
  bool explore(int pos, int discovered, std::vector<int>& label, std::vector<Vertex>& at) {
    if (pos > last_) return false;
    const Vertex x = at[pos];
    if (x < 0 || x > last_) return false;
    Row row(1, 0);
    std::vector<Vertex> fresh;
    for (std::uint64_t bits = adj_[x]; bits; bits &= bits - 1) {
      const Vertex y = std::countr_zero(bits);
      if (label[y] < 0) fresh.push_back(y);
      else if (label[y] > pos) row.push_back(label[y]);
    }
    row[0] = static_cast<int>(fresh.size());
    std::sort(row.begin() + 1, row.end());
    if (row != rows_[pos]) return row < rows_[pos];

    // Try every order of the fresh block; the labels are the next free ones.
    bool smaller = false;
    do {
      for (std::size_t i = 0; i < fresh.size(); ++i) {
        label[fresh[i]] = discovered + static_cast<int>(i);
        at[discovered + i] = fresh[i];
      }
      smaller = explore(pos + 1, discovered + static_cast<int>(fresh.size()), label, at);
      for (std::size_t i = 0; i < fresh.size(); ++i) {
        label[fresh[i]] = -1;
        at[discovered + i] = -1;
      }
    } while (!smaller && std::next_permutation(fresh.begin(), fresh.end()));
    return smaller;
  }

  void connect(Vertex a, Vertex b) {
    adj_[a] |= std::uint64_t{1} << b;
    adj_[b] |= std::uint64_t{1} << a;
    ++degree_[a];
    ++degree_[b];
  }

  void disconnect(Vertex a, Vertex b) {
    adj_[a] &= ~(std::uint64_t{1} << b);
    adj_[b] &= ~(std::uint64_t{1} << a);
    --degree_[a];
    --degree_[b];
  }

  void record() {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = a + 1; b < n_; ++b)
        if (adj_[a] >> b & 1) edges.emplace_back(a, b);
    Graph canonical = canonical_form(Graph(n_, edges)).graph;
    std::string code = emit_graph6(canonical);
    found_.try_emplace(std::move(code), std::move(canonical));
  }

  int n_;
  int k_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> degree_;
  std::vector<Row> rows_;
  int discovered_ = 0;
  int last_ = 0;
  std::map<std::string, Graph> found_;
};

}  // namespace

std::vector<Graph> enumerate_connected_k_regular(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("order must be >= 1 and degree >= 0");
  if (n > enumeration_cap(k)) {
    throw std::invalid_argument("built-in enumeration is capped at n = " + std::to_string(enumeration_cap(k)) +
                                " for k = " + std::to_string(k) + "; supply a graph6 corpus instead");
  }
  if (k >= n || (n * k) % 2 != 0) {
    if (n == 1 && k == 0) return {Graph(1, std::vector<Edge>{})};
    return {};
  }
  return RegularGenerator(n, k).run();
}

}  // namespace skewopt
