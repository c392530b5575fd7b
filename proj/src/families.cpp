#include "skewopt/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>

#include "skewopt/spectra.hpp"

namespace skewopt {

namespace {

using Kind = FamilyLabel::Kind;

// Index of u_k and v_k in the GI/HJ orderings. Both orderings list u, v and
// then groups (u_{2l-1}, u_{2l}, v_{2l-1}, v_{2l}); HJ ends with the pair
// u_{2j+1}, u_{2j+2}, which lands on the same formula.
constexpr Vertex kU = 0;
constexpr Vertex kV = 1;
constexpr Vertex u_(int k) { return 2 + 4 * ((k - 1) / 2) + (k - 1) % 2; }
constexpr Vertex v_(int k) { return 4 + 4 * ((k - 1) / 2) + (k - 1) % 2; }

void require_param(const FamilyLabel& label) {
  if ((label.kind == Kind::GI || label.kind == Kind::HJ) ? label.param < 1 : label.param != 0) {
    throw std::invalid_argument("invalid family parameter for " + label.name());
  }
}

// Edges shared by the first stage of GI and HJ: u and v joined to u1,u2,v1,v2.
void add_hub_edges(std::vector<Edge>& edges) {
  for (Vertex hub : {kU, kV})
    for (Vertex w : {u_(1), u_(2), v_(1), v_(2)}) edges.emplace_back(hub, w);
}

std::vector<Edge> inner_cycle(int t) {
  return {{u_(2 * t + 1), v_(2 * t + 2)},
          {v_(2 * t + 2), u_(2 * t + 2)},
          {u_(2 * t + 2), v_(2 * t + 1)},
          {v_(2 * t + 1), u_(2 * t + 1)}};
}

Edge normalized(Edge e) { return {std::min(e.first, e.second), std::max(e.first, e.second)}; }

void erase_edges(std::vector<Edge>& edges, const std::vector<Edge>& gone) {
  for (Edge e : gone) {
    auto it = std::find(edges.begin(), edges.end(), normalized(e));
    if (it == edges.end()) throw ConstructionError("recursive step removes a missing edge");
    edges.erase(it);
  }
}

std::vector<Edge> normalized_all(std::vector<Edge> edges) {
  for (auto& e : edges) e = normalized(e);
  return edges;
}

std::vector<Edge> gi_edges(int i) {
  std::vector<Edge> edges;
  add_hub_edges(edges);
  for (int a : {1, 2})
    for (int b : {3, 4}) {
      edges.emplace_back(u_(a), u_(b));
      edges.emplace_back(v_(a), v_(b));
    }
  for (Edge e : inner_cycle(1)) edges.push_back(e);
  edges = normalized_all(edges);
  for (int t = 2; t <= i; ++t) {
    erase_edges(edges, inner_cycle(t - 1));
    for (int a : {2 * t - 1, 2 * t})
      for (int b : {2 * t + 1, 2 * t + 2}) {
        edges.push_back(normalized({u_(a), u_(b)}));
        edges.push_back(normalized({v_(a), v_(b)}));
      }
    for (Edge e : inner_cycle(t)) edges.push_back(normalized(e));
  }
  return edges;
}

std::vector<Edge> hj_edges(int j) {
  std::vector<Edge> edges;
  add_hub_edges(edges);
  for (Vertex a : {u_(1), u_(2), v_(1), v_(2)})
    for (Vertex b : {u_(3), u_(4)}) edges.emplace_back(a, b);
  edges = normalized_all(edges);
  for (int t = 2; t <= j; ++t) {
    std::vector<Edge> gone;
    for (int a : {2 * t - 3, 2 * t - 2})
      for (int b : {2 * t - 1, 2 * t}) gone.emplace_back(v_(a), u_(b));
    erase_edges(edges, gone);
    for (int a : {2 * t - 3, 2 * t - 2})
      for (int b : {2 * t - 1, 2 * t}) edges.push_back(normalized({v_(a), v_(b)}));
    for (int a : {2 * t - 1, 2 * t})
      for (int b : {2 * t + 1, 2 * t + 2}) {
        edges.push_back(normalized({u_(a), u_(b)}));
        edges.push_back(normalized({v_(a), u_(b)}));
      }
  }
  return edges;
}

std::vector<Edge> hypercube_edges(int dim) {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < (1 << dim); ++x)
    for (int b = 0; b < dim; ++b)
      if (!(x & (1 << b))) edges.emplace_back(x, x | (1 << b));
  return edges;
}

// S_{d+1} = [[S_d, I], [-I, -S_d]] starting from the 2x2 rotation; gives
// S_d^T S_d = d I at every level.
IntMatrix doubled_skew(int dim) {
  IntMatrix s{{0, 1}, {-1, 0}};
  for (int d = 1; d < dim; ++d) {
    const int half = s.rows();
    IntMatrix next(2 * half, 2 * half);
    next.place(0, 0, s);
    next.place(0, half, IntMatrix::identity(half));
    next.place(half, 0, -IntMatrix::identity(half));
    next.place(half, half, -s);
    s = next;
  }
  return s;
}

const IntMatrix& g1_matrix() {
  static const IntMatrix m{
      {0, 1, 1, 1, 1, 0, 0, 0},    {-1, 0, -1, 1, 0, 1, 0, 0}, {-1, 1, 0, -1, 0, 0, 1, 0},
      {-1, -1, 1, 0, 0, 0, 0, 1},  {-1, 0, 0, 0, 0, -1, -1, -1}, {0, -1, 0, 0, 1, 0, 1, -1},
      {0, 0, -1, 0, 1, -1, 0, 1},  {0, 0, 0, -1, 1, 1, -1, 0},
  };
  return m;
}

const IntMatrix& g2_matrix() {
  static const IntMatrix m{
      {0, 1, 1, 1, 1, 0},   {-1, 0, -1, 0, 1, -1}, {-1, 1, 0, -1, 0, 1},
      {-1, 0, 1, 0, -1, -1}, {-1, -1, 0, 1, 0, 1},  {0, 1, -1, 1, -1, 0},
  };
  return m;
}

const IntMatrix& g3_matrix() {
  static const IntMatrix m{
      {0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {-1, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0},
      {-1, 0, 0, 0, 0, -1, 0, 0, 1, 1, 0, 0, 0, 0},
      {-1, 0, 0, 0, 0, 0, -1, 0, -1, 0, 1, 0, 0, 0},
      {-1, 0, 0, 0, 0, 0, 0, -1, 0, -1, -1, 0, 0, 0},
      {0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0},
      {0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1},
      {0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, -1},
      {0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1},
      {0, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1},
      {0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0},
      {0, 0, 0, 0, 0, -1, 1, 0, 0, -1, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, -1, 0, 1, -1, 0, -1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, -1, 1, 1, -1, 0, 0, 0, 0},
  };
  return m;
}

// Underlying graphs of G1, G2, G3 as read off their structural derivations.
std::vector<Edge> g1_edges() {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = a + 1; b < 4; ++b) {
      edges.emplace_back(a, b);          // K4 on u1..u4
      edges.emplace_back(a + 4, b + 4);  // K4 on v1..v4
    }
    edges.emplace_back(a, a + 4);  // u_i v_i
  }
  return edges;
}

std::vector<Edge> g2_edges() {
  // Octahedron: every pair except u1u6, u2u4, u3u5.
  std::vector<Edge> edges;
  const std::vector<Edge> missing{{0, 5}, {1, 3}, {2, 4}};
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      if (std::find(missing.begin(), missing.end(), Edge{a, b}) == missing.end()) edges.emplace_back(a, b);
  return edges;
}

std::vector<Edge> g3_edges() {
  enum : Vertex { u, u1, u2, v1, v2, v, u3, u4, v3, v4, w, u5, u6, v5 };
  return {{u, u1},   {u, u2},   {u, v1},   {u, v2},   {u1, v},   {u1, u3},  {u1, u4},
          {u2, v},   {u2, v3},  {u2, v4},  {v1, u3},  {v1, v3},  {v1, w},   {v2, u4},
          {v2, v4},  {v2, w},   {v, u5},   {v, u6},   {u3, u5},  {u3, v5},  {u4, u6},
          {u4, v5},  {v3, u6},  {v3, v5},  {v4, u5},  {v4, v5},  {w, u5},   {w, u6}};
}

using ArcMap = std::map<Edge, Arc>;

ArcMap arcs_of(const OrientedGraph& g) {
  ArcMap out;
  for (const Arc& a : g.arcs()) out[normalized({a.tail, a.head})] = a;
  return out;
}

// One recursive orientation step: every edge of `edges` keeps its arc from
// `kept` if present there, otherwise takes its arc from `fresh`.
OrientedGraph apply_step(int n, const std::vector<Edge>& edges, const ArcMap& kept,
                         const std::vector<Arc>& fresh) {
  ArcMap assigned;
  for (const Arc& a : fresh) {
    const Edge e = normalized({a.tail, a.head});
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
      throw ConstructionError("prescribed arc is not an edge of the next graph");
    }
    assigned[e] = a;
  }
  std::vector<Arc> arcs;
  for (Edge e : edges) {
    if (auto it = kept.find(e); it != kept.end()) {
      arcs.push_back(it->second);
    } else if (auto jt = assigned.find(e); jt != assigned.end()) {
      arcs.push_back(jt->second);
    } else {
      throw ConstructionError("recursive orientation leaves an edge undirected");
    }
  }
  return OrientedGraph(n, arcs);
}

// Grows GI(1)'s orientation one stage at a time.
OrientedGraph orient_gi(int i) {
  OrientedGraph g = orientation_from_matrix(block_skew_matrix(FamilyLabel::gi(1), canonical_blocks()));
  for (int t = 2; t <= i; ++t) {
    const std::vector<Arc> fresh{
        {u_(2 * t - 1), u_(2 * t + 1)}, {u_(2 * t - 1), u_(2 * t + 2)},
        {u_(2 * t + 1), u_(2 * t)},     {u_(2 * t + 2), u_(2 * t)},
        {v_(2 * t - 1), v_(2 * t + 1)}, {v_(2 * t - 1), v_(2 * t + 2)},
        {v_(2 * t + 1), v_(2 * t)},     {v_(2 * t + 2), v_(2 * t)},
        {u_(2 * t + 1), v_(2 * t + 2)}, {v_(2 * t + 2), u_(2 * t + 2)},
        {u_(2 * t + 2), v_(2 * t + 1)}, {v_(2 * t + 1), u_(2 * t + 1)},
    };
    g = apply_step(4 * t + 6, gi_edges(t), arcs_of(g), fresh);
  }
  return g;
}

// HJ: as above, except the four u-u edges into u_{2t-1}, u_{2t}
// are re-oriented at stage t.
OrientedGraph orient_hj(int j) {
  OrientedGraph g = orientation_from_matrix(block_skew_matrix(FamilyLabel::hj(1), canonical_blocks()));
  for (int t = 2; t <= j; ++t) {
    ArcMap kept = arcs_of(g);
    for (int a : {2 * t - 3, 2 * t - 2})
      for (int b : {2 * t - 1, 2 * t}) kept.erase(normalized({u_(a), u_(b)}));
    const std::vector<Arc> fresh{
        {u_(2 * t - 3), u_(2 * t - 1)}, {u_(2 * t - 3), u_(2 * t)},
        {u_(2 * t - 1), u_(2 * t - 2)}, {u_(2 * t), u_(2 * t - 2)},
        {v_(2 * t - 3), v_(2 * t - 1)}, {v_(2 * t - 3), v_(2 * t)},
        {v_(2 * t - 1), v_(2 * t - 2)}, {v_(2 * t), v_(2 * t - 2)},
        {u_(2 * t + 1), u_(2 * t - 1)}, {u_(2 * t - 1), u_(2 * t + 2)},
        {u_(2 * t), u_(2 * t + 1)},     {u_(2 * t + 2), u_(2 * t)},
        {u_(2 * t + 1), v_(2 * t - 1)}, {u_(2 * t + 2), v_(2 * t - 1)},
        {v_(2 * t), u_(2 * t + 1)},     {v_(2 * t), u_(2 * t + 2)},
    };
    g = apply_step(4 * t + 4, hj_edges(t), kept, fresh);
  }
  return g;
}

// Optimum orientations of C4 and K4 as returned by the switching-class search.
const std::vector<Arc> kC4Arcs{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
const std::vector<Arc> kK4Arcs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}};

void require_shape(const IntMatrix& m, int rows, int cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw std::invalid_argument(std::string("block ") + what + " has the wrong shape");
  }
}

}  // namespace

FamilyLabel FamilyLabel::gi(int i) {
  if (i < 1) throw std::invalid_argument("GI parameter must be >= 1");
  return {Kind::GI, i};
}

FamilyLabel FamilyLabel::hj(int j) {
  if (j < 1) throw std::invalid_argument("HJ parameter must be >= 1");
  return {Kind::HJ, j};
}

std::string FamilyLabel::name() const {
  switch (kind) {
    case Kind::G1: return "G1";
    case Kind::G2: return "G2";
    case Kind::G3: return "G3";
    case Kind::Q4: return "Q4";
    case Kind::GI: return "GI(" + std::to_string(param) + ")";
    case Kind::HJ: return "HJ(" + std::to_string(param) + ")";
    case Kind::K2: return "K2";
    case Kind::C4: return "C4";
    case Kind::K4: return "K4";
    case Kind::Q3: return "Q3";
  }
  return "?";
}

std::optional<FamilyLabel> FamilyLabel::parse(std::string_view text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  static const std::map<std::string, FamilyLabel> fixed{
      {"g1", g1()}, {"g2", g2()}, {"g3", g3()}, {"q4", q4()}, {"k2", k2()},
      {"c4", c4()}, {"k4", k4()}, {"q3", q3()},
  };
  if (auto it = fixed.find(s); it != fixed.end()) return it->second;
  if (s.size() < 3 || (s.rfind("gi", 0) != 0 && s.rfind("hj", 0) != 0)) return std::nullopt;
  std::string_view rest = std::string_view(s).substr(2);
  if (!rest.empty() && rest.front() == ':') {
    rest.remove_prefix(1);
  } else if (!rest.empty() && rest.front() == '(') {
    if (rest.back() != ')') return std::nullopt;
    rest = rest.substr(1, rest.size() - 2);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc{} || ptr != rest.data() + rest.size() || value < 1) return std::nullopt;
  return s[0] == 'g' ? gi(value) : hj(value);
}

int family_degree(const FamilyLabel& label) {
  switch (label.kind) {
    case Kind::K2: return 1;
    case Kind::C4: return 2;
    case Kind::K4:
    case Kind::Q3: return 3;
    default: return 4;
  }
}

int family_order(const FamilyLabel& label) {
  require_param(label);
  switch (label.kind) {
    case Kind::G1: return 8;
    case Kind::G2: return 6;
    case Kind::G3: return 14;
    case Kind::Q4: return 16;
    case Kind::GI: return 4 * label.param + 6;
    case Kind::HJ: return 4 * label.param + 4;
    case Kind::K2: return 2;
    case Kind::C4: return 4;
    case Kind::K4: return 4;
    case Kind::Q3: return 8;
  }
  return 0;
}

Graph build_family(const FamilyLabel& label) {
  const int n = family_order(label);
  std::vector<Edge> edges;
  switch (label.kind) {
    case Kind::G1: edges = g1_edges(); break;
    case Kind::G2: edges = g2_edges(); break;
    case Kind::G3: edges = g3_edges(); break;
    case Kind::Q4: edges = hypercube_edges(4); break;
    case Kind::Q3: edges = hypercube_edges(3); break;
    case Kind::GI: edges = gi_edges(label.param); break;
    case Kind::HJ: edges = hj_edges(label.param); break;
    case Kind::K2: edges = {{0, 1}}; break;
    case Kind::C4: edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}}; break;
    case Kind::K4: edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}; break;
  }
  return Graph(n, edges);
}

IntMatrix reference_skew_matrix(const FamilyLabel& label) {
  switch (label.kind) {
    case Kind::G1: return g1_matrix();
    case Kind::G2: return g2_matrix();
    case Kind::G3: return g3_matrix();
    default: throw std::invalid_argument("no reference matrix for " + label.name());
  }
}

OrientedGraph orientation_from_matrix(const IntMatrix& s) {
  if (!s.is_skew_symmetric()) throw ConstructionError("matrix is not skew-symmetric");
  std::vector<Arc> arcs;
  for (int r = 0; r < s.rows(); ++r) {
    for (int c = 0; c < s.cols(); ++c) {
      const auto x = s(r, c);
      if (x < -1 || x > 1) throw ConstructionError("skew matrix entry outside {-1,0,1}");
      if (x == 1) arcs.push_back({r, c});
    }
  }
  return OrientedGraph(s.rows(), arcs);
}

OrientedGraph orient_family(const FamilyLabel& label) {
  require_param(label);
  OrientedGraph g;
  switch (label.kind) {
    case Kind::G1:
    case Kind::G2:
    case Kind::G3: g = orientation_from_matrix(reference_skew_matrix(label)); break;
    case Kind::Q4: g = orientation_from_matrix(doubled_skew(4)); break;
    case Kind::Q3: g = orientation_from_matrix(doubled_skew(3)); break;
    case Kind::K2: g = orientation_from_matrix(doubled_skew(1)); break;
    case Kind::GI: g = orient_gi(label.param); break;
    case Kind::HJ: g = orient_hj(label.param); break;
    case Kind::C4: g = OrientedGraph(4, kC4Arcs); break;
    case Kind::K4: g = OrientedGraph(4, kK4Arcs); break;
  }
  if (!(g.base() == build_family(label))) {
    throw ConstructionError("orientation of " + label.name() + " has the wrong underlying graph");
  }
  if (!is_optimum(g, family_degree(label))) {
    throw ConstructionError("orientation of " + label.name() + " is not optimum");
  }
  return g;
}

BlockSet canonical_blocks() {
  return BlockSet{
      IntMatrix{{1, 1, 1, 1}, {1, 1, -1, -1}},
      IntMatrix{{1, 1, 0, 0}, {-1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, -1, -1}},
      IntMatrix{{0, 0, -1, 1}, {0, 0, 1, -1}, {1, -1, 0, 0}, {-1, 1, 0, 0}},
      IntMatrix{{-1, 1}, {1, -1}, {-1, -1}, {1, 1}},
  };
}

std::vector<IdentityResult> check_block_identities(const BlockSet& blocks, int which) {
  require_shape(blocks.a, 2, 4, "A");
  require_shape(blocks.b, 4, 4, "B");
  require_shape(blocks.c, 4, 4, "C");
  require_shape(blocks.d, 4, 2, "D");
  const IntMatrix& a = blocks.a;
  const IntMatrix& b = blocks.b;
  const IntMatrix& c = blocks.c;
  const IntMatrix& d = blocks.d;
  const IntMatrix at = a.transpose(), bt = b.transpose(), ct = c.transpose(), dt = d.transpose();
  const IntMatrix i2 = IntMatrix::identity(2, 4), i4 = IntMatrix::identity(4, 4);

  auto check = [](std::string name, const IntMatrix& lhs, const IntMatrix& rhs) {
    return IdentityResult{std::move(name), lhs == rhs};
  };
  const IntMatrix z24(2, 4), z44(4, 4), z22(2, 2), z42(4, 2);

  switch (which) {
    case 1:
      return {check("AA^T=4I2", a * at, i2),           check("A^TA+BB^T=4I4", at * a + b * bt, i4),
              check("B^TB+BB^T=4I4", bt * b + b * bt, i4), check("B^TB+C^TC=4I4", bt * b + ct * c, i4),
              check("AB=0", a * b, z24),               check("B^2=0", b * b, z44),
              check("BC=0", b * c, z44)};
    case 2:
      return {check("AA^T=4I2", a * at, i2), check("A^TA+DD^T=4I4", at * a + d * dt, i4),
              check("D^TD=4I2", dt * d, i2), check("AD=0", a * d, z22)};
    case 3:
      return {check("AA^T=4I2", a * at, i2),           check("A^TA+BB^T=4I4", at * a + b * bt, i4),
              check("B^TB+DD^T=4I4", bt * b + d * dt, i4), check("D^TD=4I2", dt * d, i2),
              check("AB=0", a * b, z24),               check("BD=0", b * d, z42)};
    default: throw std::invalid_argument("identity set must be 1, 2 or 3");
  }
}

IntMatrix block_skew_matrix(const FamilyLabel& label, const BlockSet& blocks) {
  if (label.kind != Kind::GI && label.kind != Kind::HJ) {
    throw std::invalid_argument("block form exists only for GI and HJ");
  }
  require_param(label);

  std::vector<IdentityResult> required;
  auto require_set = [&](int which) {
    auto r = check_block_identities(blocks, which);
    required.insert(required.end(), r.begin(), r.end());
  };
  if (label.kind == Kind::GI) {
    require_set(1);
  } else if (label.param == 1) {
    require_set(2);
  } else {
    require_set(3);
    if (label.param >= 3) {
      for (auto& r : check_block_identities(blocks, 1)) {
        if (r.name == "B^TB+BB^T=4I4" || r.name == "B^2=0") required.push_back(r);
      }
    }
  }
  for (const auto& r : required) {
    if (!r.holds) throw std::invalid_argument("blocks violate identity " + r.name);
  }

  const int n = family_order(label);
  const int stages = label.kind == Kind::GI ? label.param + 1 : label.param;
  IntMatrix s(n, n);
  auto row_of = [](int stage) { return stage == 0 ? 0 : 2 + 4 * (stage - 1); };
  s.place(0, 2, blocks.a);
  s.place(2, 0, -blocks.a.transpose());
  for (int l = 1; l < stages; ++l) {
    s.place(row_of(l), row_of(l + 1), blocks.b);
    s.place(row_of(l + 1), row_of(l), -blocks.b.transpose());
  }
  if (label.kind == Kind::GI) {
    s.place(row_of(stages), row_of(stages), blocks.c);
  } else {
    const int tail = row_of(stages + 1);
    s.place(row_of(stages), tail, blocks.d);
    s.place(tail, row_of(stages), -blocks.d.transpose());
  }
  return s;
}

std::vector<std::string> vertex_names(const FamilyLabel& label) {
  const int n = family_order(label);
  std::vector<std::string> names(n);
  switch (label.kind) {
    case Kind::G1:
      return {"u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"};
    case Kind::G2:
      return {"u1", "u2", "u3", "u4", "u5", "u6"};
    case Kind::G3:
      return {"u", "u1", "u2", "v1", "v2", "v", "u3", "u4", "v3", "v4", "w", "u5", "u6", "v5"};
    case Kind::GI:
    case Kind::HJ: {
      names[kU] = "u";
      names[kV] = "v";
      const int top = label.kind == Kind::GI ? 2 * label.param + 2 : 2 * label.param;
      for (int k = 1; k <= top; ++k) {
        names[u_(k)] = "u" + std::to_string(k);
        names[v_(k)] = "v" + std::to_string(k);
      }
      if (label.kind == Kind::HJ) {
        names[u_(top + 1)] = "u" + std::to_string(top + 1);
        names[u_(top + 2)] = "u" + std::to_string(top + 2);
      }
      return names;
    }
    case Kind::Q4:
    case Kind::Q3: {
      const int dim = label.kind == Kind::Q4 ? 4 : 3;
      for (int x = 0; x < n; ++x)
        for (int b = dim - 1; b >= 0; --b) names[x].push_back((x >> b) & 1 ? '1' : '0');
      return names;
    }
    default:
      for (int x = 0; x < n; ++x) names[x] = std::to_string(x);
      return names;
  }
}

}  // namespace skewopt
