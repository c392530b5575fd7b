#include "skewopt/census.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "skewopt/canonical.hpp"
#include "skewopt/formats.hpp"
#include "skewopt/search.hpp"

namespace skewopt {

namespace {

CensusRecord examine(const Graph& input, int k) {
  CensusRecord record;
  record.order = input.order();
  if (!is_regular(input, k) || !is_connected(input)) {
    record.graph6 = emit_graph6(input);
    record.skipped = "not a connected " + std::to_string(k) + "-regular graph";
    return record;
  }
  const Graph g = canonical_form(input).graph;
  record.graph6 = emit_graph6(g);
  record.witness = find_optimum_orientation(g, k);
  record.has_optimum = record.witness.has_value();
  if (k >= 1 && k <= 4) {
    record.classification = classify_regular(g, k);
    record.violation = record.classification->in_family() != record.has_optimum;
  }
  return record;
}

}  // namespace

CensusReport census(std::span<const Graph> inputs, int k, int workers) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (workers < 1) throw std::invalid_argument("worker count must be >= 1");

  std::vector<CensusRecord> records(inputs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < inputs.size(); i = next.fetch_add(1)) {
      records[i] = examine(inputs[i], k);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::stable_sort(records.begin(), records.end(), [](const CensusRecord& a, const CensusRecord& b) {
    const bool a_skipped = !a.skipped.empty();
    const bool b_skipped = !b.skipped.empty();
    if (a_skipped != b_skipped) return b_skipped;
    if (a.order != b.order) return a.order < b.order;
    return a.graph6 < b.graph6;
  });

  CensusReport report;
  report.k = k;
  for (const auto& r : records) {
    if (!r.skipped.empty()) continue;
    auto& t = report.totals[r.order];
    ++t.graphs;
    if (r.has_optimum) ++t.with_optimum;
    if (r.violation) ++report.violations;
  }
  report.records = std::move(records);
  return report;
}

}  // namespace skewopt
