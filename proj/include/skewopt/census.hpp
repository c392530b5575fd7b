#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewopt/classify.hpp"
#include "skewopt/graph.hpp"

namespace skewopt {

struct CensusRecord {
  std::string graph6;  // canonical form; the witness orients this graph
  int order = 0;
  bool has_optimum = false;
  std::optional<Classification> classification;  // absent for degrees without a known family
  std::optional<OrientedGraph> witness;
  bool violation = false;  // classification disagrees with the search
  std::string skipped;     // nonempty: input rejected, with the reason
};

struct CensusTotals {
  int graphs = 0;
  int with_optimum = 0;
  friend bool operator==(const CensusTotals&, const CensusTotals&) = default;
};

struct CensusReport {
  int k = 0;
  std::vector<CensusRecord> records;  // sorted by (order, graph6); skipped inputs last
  std::map<int, CensusTotals> totals;
  int violations = 0;
};

/// Searches every input for an optimum orientation and classifies it; a
/// disagreement is recorded as a violation. Inputs that are not connected
/// and k-regular are kept as skipped records. Results are identical for any
/// worker count.
CensusReport census(std::span<const Graph> inputs, int k, int workers = 1);

}  // namespace skewopt
