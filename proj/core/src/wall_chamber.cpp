#include "hyperlat/wall_chamber.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace hyperlat {

namespace {

Int mod2(Int v) { return ((v % 2) + 2) % 2; }

bool parity_matches(const LatticeVector& zeta, const LatticeVector& w) {
  for (std::size_t i = 0; i < zeta.rank(); ++i)
    if (mod2(zeta[i]) != w[i]) return false;
  return true;
}

void require_diagonal(const Lattice& lattice, const WallType& type) {
  if (!lattice.is_diagonal())
    throw DomainError("unsupported-lattice", "wall enumeration needs a diagonal (1,n) lattice");
  if (type.w.rank() != lattice.rank())
    throw DomainError("dimension-mismatch", "wall type parity vector has the wrong rank");
}

void require_positive(const Lattice& lattice, const LatticeVector& x) {
  if (square(lattice, x) <= 0)
    throw DomainError("not-positive", "class " + x.str() + " does not have positive square");
}

// Some zeta/g with g > 1 is itself a wall of the same type.
bool has_smaller_multiple(const LatticeVector& zeta, const WallType& type) {
  const Int c = zeta.content();
  for (Int g = 2; g <= c; ++g) {
    if (c % g != 0) continue;
    LatticeVector r = zeta;
    for (std::size_t i = 0; i < r.rank(); ++i) r[i] /= g;
    if (parity_matches(r, type.w)) return true;
  }
  return false;
}

// Visits every wall of the type with squared spatial norm <= bound, in both
// signs.
void enumerate_walls(const Lattice& lattice, const WallType& type, Int bound,
                     const std::function<void(const LatticeVector&)>& visit) {
  const std::size_t n = lattice.rank() - 1;
  LatticeVector zeta = LatticeVector::zero(lattice.rank());
  const Int limit = isqrt(bound);

  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int used) {
    if (i > n) {
      // zeta0^2 = used + q with p <= q <= -1.
      const Int lo = std::max<Int>(0, used + type.p);
      const Int hi = used - 1;
      if (hi < lo) return;
      Int r = isqrt(lo);
      if (r * r < lo) ++r;
      for (; r * r <= hi; ++r) {
        if (mod2(r) != type.w[0]) continue;
        zeta[0] = r;
        visit(zeta);
        if (r != 0) {
          zeta[0] = -r;
          visit(zeta);
        }
      }
      zeta[0] = 0;
      return;
    }
    for (Int c = -limit; c <= limit; ++c) {
      if (mod2(c) != type.w[i]) continue;
      const Int next = used + c * c;
      if (next > bound) continue;
      zeta[i] = c;
      rec(i + 1, next);
    }
    zeta[i] = 0;
  };
  rec(1, 0);
}

Int spatial_norm(const LatticeVector& v) {
  Int s = 0;
  for (std::size_t i = 1; i < v.rank(); ++i) s = checked::add(s, checked::mul(v[i], v[i]));
  return s;
}

// The separating wall zeta vanishes at z = (-b) x + a y with a = zeta.x > 0 > b.
// Any zeta orthogonal to a positive z with q(zeta) >= p obeys
// |zeta_spatial|^2 q(z) <= |p| z0^2.
void assert_crossing_bound(const Lattice& lattice, const LatticeVector& zeta, const LatticeVector& x,
                           const LatticeVector& y, const WallType& type) {
  const Int a = inner_product(lattice, zeta, x);
  const Int b = inner_product(lattice, zeta, y);
  BigInt z0 = BigInt(-b) * x[0] + BigInt(a) * y[0];
  BigInt qz = z0 * z0;
  for (std::size_t i = 1; i < x.rank(); ++i) {
    BigInt zi = BigInt(-b) * x[i] + BigInt(a) * y[i];
    qz -= zi * zi;
  }
  const BigInt lhs = BigInt(spatial_norm(zeta)) * qz;
  const BigInt rhs = BigInt(-type.p) * z0 * z0;
  if (qz <= 0 || lhs > rhs)
    throw TheoremViolation("wall-bound", "separating wall " + zeta.str() + " violates the crossing-point norm bound");
}

struct SegmentWalls {
  std::vector<LatticeVector> separating;
  std::vector<LatticeVector> through_x;
  std::vector<LatticeVector> through_y;
};

SegmentWalls segment_walls(const Lattice& lattice, const LatticeVector& x, const LatticeVector& y,
                           const WallType& type) {
  require_diagonal(lattice, type);
  require_positive(lattice, x);
  require_positive(lattice, y);
  if (inner_product(lattice, x, y) <= 0)
    throw DomainError("opposite-cone", "x.y <= 0: classes lie in opposite components of the positive cone");

  const Int bound = wall_search_bound(lattice, x, y, type);
  SegmentWalls out;
  enumerate_walls(lattice, type, bound, [&](const LatticeVector& zeta) {
    if (has_smaller_multiple(zeta, type)) return;
    const Int a = inner_product(lattice, zeta, x);
    const Int b = inner_product(lattice, zeta, y);
    if (a > 0 && b < 0) {
      out.separating.push_back(zeta);
    }
    // The negated vector is visited as well; keep the lexicographically larger sign.
    if (a == 0 && zeta > -zeta) out.through_x.push_back(zeta);
    if (b == 0 && zeta > -zeta) out.through_y.push_back(zeta);
  });
  for (const auto& zeta : out.separating) assert_crossing_bound(lattice, zeta, x, y, type);
  std::sort(out.separating.begin(), out.separating.end());
  std::sort(out.through_x.begin(), out.through_x.end());
  std::sort(out.through_y.begin(), out.through_y.end());
  return out;
}

}  // namespace

WallType WallType::make(const LatticeVector& w, Int p) {
  if (p >= 0) throw DomainError("bad-wall-type", "wall type needs p < 0");
  WallType t;
  t.w = w;
  for (std::size_t i = 0; i < t.w.rank(); ++i) t.w[i] = mod2(t.w[i]);
  t.p = p;
  return t;
}

bool is_wall(const Lattice& lattice, const LatticeVector& zeta, const WallType& type) {
  if (zeta.rank() != type.w.rank()) throw DomainError("dimension-mismatch", "wall type rank");
  if (!parity_matches(zeta, type.w)) return false;
  const Int q = square(lattice, zeta);
  return type.p <= q && q < 0;
}

Int wall_search_bound(const Lattice& lattice, const LatticeVector& x, const LatticeVector& y,
                      const WallType& type) {
  require_diagonal(lattice, type);
  const Int qx = square(lattice, x);
  const Int qy = square(lattice, y);
  if (qx <= 0 || qy <= 0) throw DomainError("not-positive", "segment endpoints need positive square");
  const BigInt lead = std::max(BigInt(x[0]) * x[0], BigInt(y[0]) * y[0]);
  const BigInt b = BigInt(-type.p) * lead / std::min(qx, qy);
  if (b > std::numeric_limits<Int>::max()) throw OverflowError("wall search bound");
  return static_cast<Int>(b);
}

std::vector<LatticeVector> separating_walls(const Lattice& lattice, const LatticeVector& x,
                                            const LatticeVector& y, const WallType& type) {
  return segment_walls(lattice, x, y, type).separating;
}

std::vector<LatticeVector> walls_through(const Lattice& lattice, const LatticeVector& x,
                                         const WallType& type) {
  return segment_walls(lattice, x, x, type).through_x;
}

namespace {

void require_off_walls(const SegmentWalls& walls, const LatticeVector& x, const LatticeVector& y) {
  if (!walls.through_x.empty())
    throw DomainError("on-wall", x.str() + " lies on the wall " + walls.through_x.front().str());
  if (!walls.through_y.empty())
    throw DomainError("on-wall", y.str() + " lies on the wall " + walls.through_y.front().str());
}

}  // namespace

bool same_chamber(const Lattice& lattice, const LatticeVector& x, const LatticeVector& y,
                  const WallType& type) {
  const auto walls = segment_walls(lattice, x, y, type);
  require_off_walls(walls, x, y);
  return walls.separating.empty();
}

std::vector<WallCrossing> wall_chain(const Lattice& lattice, const LatticeVector& x,
                                     const LatticeVector& y, const WallType& type) {
  const auto walls = segment_walls(lattice, x, y, type);
  require_off_walls(walls, x, y);
  std::vector<WallCrossing> chain;
  for (const auto& zeta : walls.separating) {
    const Int a = inner_product(lattice, zeta, x);
    const Int b = inner_product(lattice, zeta, y);
    chain.push_back({zeta, Rational(a) / Rational(BigInt(a) - b), false});
  }
  std::stable_sort(chain.begin(), chain.end(),
                   [](const WallCrossing& l, const WallCrossing& r) { return l.parameter < r.parameter; });
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i].parameter == chain[i + 1].parameter) chain[i].tied = chain[i + 1].tied = true;
  return chain;
}

}  // namespace hyperlat
