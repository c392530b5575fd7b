#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewopt/graph.hpp"
#include "skewopt/int_matrix.hpp"

namespace skewopt {

/// Members of the 4-regular optimum family F, plus the small-degree optimum
/// graphs K2 (k=1), C4 (k=2), K4 and Q3 (k=3).
struct FamilyLabel {
  enum class Kind { G1, G2, G3, Q4, GI, HJ, K2, C4, K4, Q3 };

  Kind kind = Kind::G1;
  int param = 0;  // i for GI, j for HJ; 0 otherwise

  static FamilyLabel g1() { return {Kind::G1, 0}; }
  static FamilyLabel g2() { return {Kind::G2, 0}; }
  static FamilyLabel g3() { return {Kind::G3, 0}; }
  static FamilyLabel q4() { return {Kind::Q4, 0}; }
  static FamilyLabel gi(int i);
  static FamilyLabel hj(int j);
  static FamilyLabel k2() { return {Kind::K2, 0}; }
  static FamilyLabel c4() { return {Kind::C4, 0}; }
  static FamilyLabel k4() { return {Kind::K4, 0}; }
  static FamilyLabel q3() { return {Kind::Q3, 0}; }

  /// "G1", "GI(3)", "HJ(2)", "Q4", ...
  std::string name() const;

  /// Accepts names case-insensitively, with the parameter written as
  /// "gi3", "gi(3)" or "gi:3". Returns nullopt for anything else.
  static std::optional<FamilyLabel> parse(std::string_view text);

  friend bool operator==(const FamilyLabel&, const FamilyLabel&) = default;
};

/// Degree of every vertex of the family member.
int family_degree(const FamilyLabel& label);

int family_order(const FamilyLabel& label);

/// The underlying graph in its fixed vertex ordering:
///   G1: u1..u4, v1..v4        G2: u1..u6
///   G3: u,u1,u2,v1,v2,v,u3,u4,v3,v4,w,u5,u6,v5
///   GI(i): u,v, then u_{2l-1},u_{2l},v_{2l-1},v_{2l} for l = 1..i+1
///   HJ(j): u,v, then u_{2l-1},u_{2l},v_{2l-1},v_{2l} for l = 1..j, then u_{2j+1},u_{2j+2}
///   Q4, Q3: binary coordinates, vertex x adjacent to x ^ (1 << b)
Graph build_family(const FamilyLabel& label);

/// An orientation with S^T S = kI for the member's degree k. The result is
/// checked exactly before returning; a failed check is a ConstructionError.
OrientedGraph orient_family(const FamilyLabel& label);

/// The explicit optimum skew matrices of G1, G2 and G3 in their fixed
/// orderings. std::invalid_argument for any other label.
IntMatrix reference_skew_matrix(const FamilyLabel& label);

/// The four blocks used to write down S(GI(i)) and S(HJ(j)).
struct BlockSet {
  IntMatrix a;  // 2x4
  IntMatrix b;  // 4x4
  IntMatrix c;  // 4x4
  IntMatrix d;  // 4x2
};

BlockSet canonical_blocks();

struct IdentityResult {
  std::string name;
  bool holds = false;
};

/// Evaluates identity set 1, 2 or 3 by exact multiplication. Throws
/// std::invalid_argument for blocks of the wrong shape or an unknown set.
///
/// Set 3 states the (u3,u4,v3,v4) diagonal block as B^T B + D D^T = 4I;
/// the transposed product D^T D is 2x2 and cannot be compared with 4I_4.
std::vector<IdentityResult> check_block_identities(const BlockSet& blocks, int which);

/// Block-tridiagonal skew matrix of GI(i) or HJ(j) assembled from `blocks`.
/// The blocks must satisfy the identities that make the result optimum
/// (set 1 for GI; set 2 for HJ(1); set 3, plus B^T B + B B^T = 4I and B^2 = 0
/// when j >= 3, for HJ); otherwise std::invalid_argument.
IntMatrix block_skew_matrix(const FamilyLabel& label, const BlockSet& blocks);

/// Symbolic vertex names of the fixed ordering, e.g. "u", "v3", "w".
/// Index i names vertex i of build_family.
std::vector<std::string> vertex_names(const FamilyLabel& label);

/// Reads an orientation off a skew-symmetric {-1,0,1} matrix with zero
/// diagonal: entry (i,j) == 1 is the arc i -> j. Anything else is a
/// ConstructionError.
OrientedGraph orientation_from_matrix(const IntMatrix& s);

}  // namespace skewopt
