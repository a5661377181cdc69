#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hyperlat/lattice.hpp"

// Chamber geometry of the odd unimodular lattice Lambda_n of type (1,n) for
// the walls of square -1, and reduction of characteristic vectors of square
// 9-n to kappa_n = 3e_0 - e_1 - ... - e_n.
//
// Vectors here always live in Lattice::diagonal(n); n is read off the rank.

namespace hyperlat {

inline constexpr std::size_t kMaxChamberRank = 8;
inline constexpr std::size_t kShapeCount = 7;

// An oriented wall alpha of the fundamental chamber C_n: q(alpha) = -1,
// alpha.kappa_n = 1. `shape` is the row (1..7) of the del Pezzo line table
// the reordered coordinates match.
struct FundamentalWall {
  LatticeVector alpha;
  int shape = 0;

  friend bool operator==(const FundamentalWall&, const FundamentalWall&) = default;
};

LatticeVector kappa(std::size_t n);

// Well-ordered representative of each shape that fits in rank n+1.
// Throws DomainError("unsupported-rank") for n > 8.
std::vector<FundamentalWall> well_ordered_walls(std::size_t n);

// Every oriented wall of C_n (all coordinate reorderings of the shape
// representatives), sorted lexicographically.
std::vector<FundamentalWall> fundamental_walls(std::size_t n);

// Number of walls of each shape in fundamental_walls(n).
std::array<std::size_t, kShapeCount> shape_counts(std::size_t n);

// Keeps alpha_0, sorts the remaining coordinates by decreasing absolute value
// (stable).
LatticeVector reorder(const LatticeVector& alpha);

// Sign/sort normal form: a_0 > 0, a_i <= 0, |a_1| >= ... >= |a_n|.
LatticeVector normalize_signs_and_order(const LatticeVector& k);

struct ChamberTest {
  bool inside = false;            // k itself lies in C_n
  bool already_normalized = false;  // k had a_0 > 0, a_i < 0 and sorted |a_i|
  LatticeVector normalized;       // sign/sort normal form of k
  bool normalized_inside = false;  // normal form lies in C_n
};

// Membership via the well-ordered walls only. Requires k characteristic with
// q(k) > 0; throws DomainError("not-characteristic") otherwise.
ChamberTest in_fundamental_chamber(const LatticeVector& k);

// Strict membership k.alpha > 0 via the well-ordered walls, no parity
// precondition (integral k only).
bool inside_fundamental_chamber(const LatticeVector& k);

// Strict membership checked against every wall in fundamental_walls(n),
// plus a_0 > 0 to pick the component of the positive cone containing kappa_n.
bool inside_by_all_walls(const LatticeVector& k);

struct CanonicalizationResult {
  Isometry phi;
  LatticeVector target;        // phi(kappa); kappa_n for n <= 8
  std::size_t steps = 0;       // number of wall reflections
  std::vector<Int> leading;    // a_0 before every reflection, then the final a_0
  bool reached_canonical = false;
};

// Finds an isometry phi with phi(k) = kappa_n by walking chambers: normalize
// signs and order, reflect in the first well-ordered wall of shape 2..7 that
// k pairs negatively with, repeat. For n <= 8 a final vector other than
// kappa_n raises TheoremViolation. For n = 9 the endpoint is reported as is.
CanonicalizationResult canonicalize(const LatticeVector& k);

// k - e_{n+1} in Lambda_{n+1}; requires k strictly inside C_n and n+1 <= 8.
LatticeVector stabilize(const LatticeVector& k);

struct E8Pair {
  LatticeVector alpha;
  LatticeVector gamma;  // alpha - kappa_8
};

// The 240 walls of C_8 paired with the roots gamma of kappa_8^perp.
std::vector<E8Pair> e8_wall_bijection();

// For primitive characteristic k in Lambda_9 with q(k) = 0: delta with
// delta.k = 1 and q(delta) = 1.
LatticeVector hyperbolic_certificate(const LatticeVector& k);

// Moves a delta with delta.k = 1 along k until q(delta) = 1.
LatticeVector adjust_certificate(const LatticeVector& k, const LatticeVector& delta);

}  // namespace hyperlat
