#pragma once

#include <vector>

#include "hyperlat/lattice.hpp"

namespace hyperlat {

// Walls of type (w,p): classes zeta with zeta == w mod 2 and p <= zeta^2 < 0.
struct WallType {
  LatticeVector w;  // entries reduced to {0,1}
  Int p = -1;

  static WallType make(const LatticeVector& w, Int p);
};

bool is_wall(const Lattice& lattice, const LatticeVector& zeta, const WallType& type);

// Walls of the given type whose hyperplane strictly separates x and y. Each
// wall appears once, signed so that zeta.x > 0; output sorted
// lexicographically. Requires a diagonal lattice, q(x), q(y) > 0, x.y > 0.
std::vector<LatticeVector> separating_walls(const Lattice& lattice, const LatticeVector& x,
                                            const LatticeVector& y, const WallType& type);

// Walls of the given type containing x (zeta.x == 0), lexicographically
// largest sign representative, sorted.
std::vector<LatticeVector> walls_through(const Lattice& lattice, const LatticeVector& x,
                                         const WallType& type);

// Throws DomainError("on-wall") when x or y lies on a wall.
bool same_chamber(const Lattice& lattice, const LatticeVector& x, const LatticeVector& y,
                  const WallType& type);

struct WallCrossing {
  LatticeVector wall;
  Rational parameter;  // s in (0,1) with zeta.((1-s)x + s y) = 0
  bool tied = false;   // another wall is crossed at the same parameter
};

// Separating walls ordered by where the segment from x to y crosses them.
std::vector<WallCrossing> wall_chain(const Lattice& lattice, const LatticeVector& x,
                                     const LatticeVector& y, const WallType& type);

// Upper bound on the squared spatial norm of any wall meeting the segment
// [x,y]: floor(|p| max(x0^2, y0^2) / min(q(x), q(y))).
Int wall_search_bound(const Lattice& lattice, const LatticeVector& x, const LatticeVector& y,
                      const WallType& type);

}  // namespace hyperlat
