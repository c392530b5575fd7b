#include "skewopt/canonical.hpp"

#include <algorithm>

namespace skewopt {

int refine_colors(const Graph& g, std::vector<int>& colors) {
  const int n = g.order();
  auto renumber = [&](const std::vector<std::vector<int>>& signature) {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return signature[a] < signature[b]; });
    int count = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++count;
      colors[order[i]] = count;
    }
    return n == 0 ? 0 : count + 1;
  };

  std::vector<std::vector<int>> signature(n);
  for (int v = 0; v < n; ++v) signature[v] = {colors[v]};
  int count = renumber(signature);
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.assign(1, colors[v]);
      for (Vertex w : g.neighbors(v)) sig.push_back(colors[w]);
      std::sort(sig.begin() + 1, sig.end());
    }
    const int next = renumber(signature);
    if (next == count) return count;
    count = next;
  }
}

namespace {

class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  void run() {
    std::vector<int> colors(g_.order(), 0);
    descend(colors);
  }

  std::vector<Vertex> best_labeling;

private:
  void descend(std::vector<int> colors) {
    const int cells = refine_colors(g_, colors);
    const int n = g_.order();
    if (cells == n) {
      consider(colors);
      return;
    }
    std::vector<int> cell_size(cells, 0);
    for (int c : colors) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < cells; ++c) {
      if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) target = c;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next(n);
      for (Vertex x = 0; x < n; ++x) next[x] = 2 * colors[x] + (x == v ? 0 : 1);
      descend(std::move(next));
    }
  }

  void consider(const std::vector<int>& labeling) {
    const int n = g_.order();
    std::vector<Vertex> at(n);
    for (Vertex v = 0; v < n; ++v) at[labeling[v]] = v;
    key_.clear();
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) key_.push_back(g_.has_edge(at[i], at[j]) ? 1 : 0);
    if (best_labeling.empty() || key_ < best_key_) {
      best_key_ = key_;
      best_labeling = labeling;
    }
  }

  const Graph& g_;
  std::vector<std::uint8_t> key_;
  std::vector<std::uint8_t> best_key_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return {{}, g};
  CanonicalSearch search(g);
  search.run();
  CanonicalForm form;
  form.labeling = std::move(search.best_labeling);
  form.graph = relabel(g, form.labeling);
  return form;
}

}  // namespace skewopt
