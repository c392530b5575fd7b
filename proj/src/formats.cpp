#include "skewopt/formats.hpp"

#include <charconv>
#include <cstdint>

namespace skewopt {

namespace {

constexpr int kBias = 63;

void append_order(std::string& out, std::uint64_t n) {
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) throw ParseError(std::string("invalid graph6 character '") + c + "'");
  return value;
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  append_order(out, static_cast<std::uint64_t>(n));
  int bits = 0;
  int current = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      current = (current << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(current + kBias));
        bits = 0;
        current = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((current << (6 - bits)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw ParseError("empty graph6 line");
  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (line[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(line[0]));
    pos = 1;
  } else if (line.size() >= 2 && line[1] == '~') {
    if (line.size() < 8) throw ParseError("truncated graph6 order");
    for (pos = 2; pos < 8; ++pos) n = (n << 6) | static_cast<std::uint64_t>(sextet(line[pos]));
    if (n < 258048) throw ParseError("non-minimal graph6 order encoding");
  } else {
    if (line.size() < 4) throw ParseError("truncated graph6 order");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | static_cast<std::uint64_t>(sextet(line[pos]));
    if (n < 63) throw ParseError("non-minimal graph6 order encoding");
  }
  if (n > 4096) throw ParseError("graph6 order too large");

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (pairs + 5) / 6;
  if (line.size() - pos != bytes) throw ParseError("graph6 body has the wrong length");

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  const int order = static_cast<int>(n);
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = sextet(line[pos + bit / 6]);
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int value = sextet(line[pos + bit / 6]);
    if (value & ((1 << (6 - bit % 6)) - 1)) throw ParseError("nonzero graph6 padding");
  }
  for (std::size_t i = pos; i < line.size(); ++i) sextet(line[i]);
  return Graph(order, edges);
}

std::vector<Graph> parse_graph6_corpus(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  std::vector<Graph> out;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::string emit_arclist(const OrientedGraph& g) {
  std::string out = std::to_string(g.order()) + ' ' + std::to_string(g.arcs().size()) + '\n';
  for (const Arc& a : g.sorted_arcs()) out += std::to_string(a.tail) + ' ' + std::to_string(a.head) + '\n';
  return out;
}

namespace {

class Tokens {
public:
  explicit Tokens(std::string_view text) : text_(text) {}

  bool next(long long& value) {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    if (pos_ == text_.size()) return false;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || (ptr != end && !is_space(*ptr))) throw ParseError("malformed integer in arc list");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return true;
  }

private:
  static bool is_space(char c) { return c == ' ' || c == '\n' || c == '\t' || c == '\r'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OrientedGraph parse_arclist(std::string_view text) {
  Tokens tokens(text);
  long long n = 0;
  long long m = 0;
  if (!tokens.next(n) || !tokens.next(m)) throw ParseError("arc list header missing");
  if (n < 0 || m < 0 || n > 4096) throw ParseError("invalid arc list header");
  std::vector<Arc> arcs;
  for (long long i = 0; i < m; ++i) {
    long long t = 0;
    long long h = 0;
    if (!tokens.next(t) || !tokens.next(h)) throw ParseError("arc list has fewer arcs than declared");
    if (t < 0 || h < 0 || t >= n || h >= n) throw ParseError("arc endpoint out of range");
    if (t == h) throw ParseError("self-loop in arc list");
    arcs.push_back({static_cast<Vertex>(t), static_cast<Vertex>(h)});
  }
  long long extra = 0;
  if (tokens.next(extra)) throw ParseError("arc list has more arcs than declared");
  try {
    return OrientedGraph(static_cast<int>(n), arcs);
  } catch (const ConstructionError& e) {
    throw ParseError(std::string("invalid arc list: ") + e.what());
  }
}

}  // namespace skewopt
