#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skewopt/graph.hpp"

namespace skewopt {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// graph6: order as one byte n+63 (n < 63), '~' plus three bytes
/// (n < 258048) or "~~" plus six bytes; then the upper triangle in column
/// order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each byte
/// value+63, zero-padded. No trailing newline.
std::string emit_graph6(const Graph& g);

/// One graph6 line without its newline. Bad characters, wrong length or
/// nonzero padding raise ParseError.
Graph parse_graph6(std::string_view line);

/// A corpus of graph6 lines; an optional ">>graph6<<" header and blank lines
/// are skipped.
std::vector<Graph> parse_graph6_corpus(std::string_view text);

/// Arc list: "n m\n" followed by m lines "t h\n" (arc t -> h, 0-indexed),
/// sorted by (tail, head).
std::string emit_arclist(const OrientedGraph& g);

/// Duplicate edges (in either direction), self-loops, endpoints >= n, a count
/// that disagrees with m, or malformed numbers raise ParseError.
OrientedGraph parse_arclist(std::string_view text);

}  // namespace skewopt
