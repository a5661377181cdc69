#include "hyperlat/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace hyperlat {

namespace {

struct ShapeRow {
  int shape;
  Int lead;
  std::vector<Int> spatial;  // nonzero spatial entries, well-ordered
};

// Rows of the line table for the del Pezzo surface of degree 1. Row 5 has
// alpha_1 = alpha_2 = alpha_3 = -2: with +2 neither q(alpha) = -1 nor
// alpha.kappa_8 = 1 holds.
const std::vector<ShapeRow>& shape_rows() {
  static const std::vector<ShapeRow> rows = [] {
    auto fill = [](std::initializer_list<std::pair<Int, int>> runs) {
      std::vector<Int> v;
      for (auto [value, count] : runs) v.insert(v.end(), count, value);
      return v;
    };
    return std::vector<ShapeRow>{
        {1, 0, fill({{1, 1}})},
        {2, 1, fill({{-1, 2}})},
        {3, 2, fill({{-1, 5}})},
        {4, 3, fill({{-2, 1}, {-1, 6}})},
        {5, 4, fill({{-2, 3}, {-1, 5}})},
        {6, 5, fill({{-2, 6}, {-1, 2}})},
        {7, 6, fill({{-3, 1}, {-2, 7}})},
    };
  }();
  return rows;
}

void require_chamber_rank(std::size_t n) {
  if (n > kMaxChamberRank)
    throw DomainError("unsupported-rank",
                      "the fundamental chamber has finitely many walls only for n <= 8; got n = " +
                          std::to_string(n));
}

// Representatives of every shape that fits into rank n+1 (no upper bound on n).
std::vector<FundamentalWall> representatives(std::size_t n) {
  std::vector<FundamentalWall> out;
  for (const auto& row : shape_rows()) {
    if (row.spatial.size() > n) continue;
    LatticeVector a = LatticeVector::zero(n + 1);
    a[0] = row.lead;
    for (std::size_t i = 0; i < row.spatial.size(); ++i) a[i + 1] = row.spatial[i];
    out.push_back({std::move(a), row.shape});
  }
  return out;
}

std::size_t rank_n(const LatticeVector& k) {
  if (k.rank() == 0) throw DomainError("dimension-mismatch", "empty vector");
  return k.rank() - 1;
}

bool all_odd(const LatticeVector& k) {
  return std::all_of(k.values().begin(), k.values().end(), [](Int x) { return x % 2 != 0; });
}

// Applies negation, sign flips and adjacent transpositions to bring v into
// sign/sort normal form, recording them in phi.
void normalize_into(const Lattice& lattice, LatticeVector& v, Isometry* phi) {
  auto apply = [&](Generator g) {
    v = g.apply(lattice, v);
    if (phi) phi->append(lattice, std::move(g));
  };
  if (v[0] < 0) apply(Generator::negate());
  const std::size_t n = v.rank() - 1;
  for (std::size_t i = 1; i <= n; ++i)
    if (v[i] > 0) apply(Generator::flip(i));
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = i; j > 1 && abs_value(v[j - 1]) < abs_value(v[j]); --j) apply(Generator::swap(j - 1, j));
}

}  // namespace

LatticeVector kappa(std::size_t n) {
  LatticeVector k(std::vector<Int>(n + 1, -1));
  k[0] = 3;
  return k;
}

std::vector<FundamentalWall> well_ordered_walls(std::size_t n) {
  require_chamber_rank(n);
  return representatives(n);
}

std::vector<FundamentalWall> fundamental_walls(std::size_t n) {
  std::vector<FundamentalWall> out;
  for (const auto& rep : well_ordered_walls(n)) {
    std::vector<Int> spatial(rep.alpha.values().begin() + 1, rep.alpha.values().end());
    std::sort(spatial.begin(), spatial.end());
    do {
      std::vector<Int> coords{rep.alpha[0]};
      coords.insert(coords.end(), spatial.begin(), spatial.end());
      out.push_back({LatticeVector(std::move(coords)), rep.shape});
    } while (std::next_permutation(spatial.begin(), spatial.end()));
  }
  std::sort(out.begin(), out.end(),
            [](const FundamentalWall& a, const FundamentalWall& b) { return a.alpha < b.alpha; });
  return out;
}

std::array<std::size_t, kShapeCount> shape_counts(std::size_t n) {
  std::array<std::size_t, kShapeCount> counts{};
  for (const auto& w : fundamental_walls(n)) ++counts[static_cast<std::size_t>(w.shape - 1)];
  return counts;
}

LatticeVector reorder(const LatticeVector& alpha) {
  if (alpha.rank() <= 2) return alpha;
  std::vector<Int> coords = alpha.values();
  std::stable_sort(coords.begin() + 1, coords.end(),
                   [](Int a, Int b) { return abs_value(a) > abs_value(b); });
  return LatticeVector(std::move(coords));
}

LatticeVector normalize_signs_and_order(const LatticeVector& k) {
  LatticeVector v = k;
  normalize_into(Lattice::diagonal(rank_n(k)), v, nullptr);
  return v;
}

bool inside_fundamental_chamber(const LatticeVector& k) {
  const std::size_t n = rank_n(k);
  require_chamber_rank(n);
  if (k[0] <= 0) return false;
  for (std::size_t i = 1; i <= n; ++i)
    if (k[i] >= 0) return false;
  const LatticeVector sorted = reorder(k);
  const Lattice lattice = Lattice::diagonal(n);
  for (const auto& wall : representatives(n))
    if (inner_product(lattice, sorted, wall.alpha) <= 0) return false;
  return true;
}

bool inside_by_all_walls(const LatticeVector& k) {
  const std::size_t n = rank_n(k);
  if (k[0] <= 0) return false;
  const Lattice lattice = Lattice::diagonal(n);
  for (const auto& wall : fundamental_walls(n))
    if (inner_product(lattice, k, wall.alpha) <= 0) return false;
  return true;
}

ChamberTest in_fundamental_chamber(const LatticeVector& k) {
  const std::size_t n = rank_n(k);
  require_chamber_rank(n);
  const Lattice lattice = Lattice::diagonal(n);
  if (!all_odd(k))
    throw DomainError("not-characteristic", k.str() + " is not characteristic, so a wall may contain it");
  if (square(lattice, k) <= 0) throw DomainError("not-positive", k.str() + " does not have positive square");
  ChamberTest t;
  t.normalized = normalize_signs_and_order(k);
  t.already_normalized = t.normalized == k;
  t.normalized_inside = inside_fundamental_chamber(t.normalized);
  t.inside = inside_fundamental_chamber(k);
  return t;
}

CanonicalizationResult canonicalize(const LatticeVector& k) {
  const std::size_t n = rank_n(k);
  if (n > kMaxChamberRank + 1)
    throw DomainError("unsupported-rank", "canonicalization is defined for n <= 9");
  const Lattice lattice = Lattice::diagonal(n);
  if (!is_characteristic(lattice, k)) throw DomainError("not-characteristic", k.str() + " is not characteristic");
  const Int expected = 9 - static_cast<Int>(n);
  if (square(lattice, k) != expected)
    throw DomainError("wrong-square", "q(kappa) must equal 9 - n = " + std::to_string(expected));
  if (n == kMaxChamberRank + 1 && k.content() != 1)
    throw DomainError("not-primitive", "for n = 9 the class must be primitive");

  const auto walls = representatives(n);
  CanonicalizationResult result{Isometry::identity(lattice.rank()), k, 0, {}, false};
  LatticeVector& v = result.target;
  for (;;) {
    normalize_into(lattice, v, &result.phi);
    const FundamentalWall* violated = nullptr;
    for (const auto& wall : walls) {
      if (wall.shape == 1) continue;  // a_i < 0 after normalization
      if (inner_product(lattice, v, wall.alpha) < 0) {
        violated = &wall;
        break;
      }
    }
    if (!violated) break;
    const Int before = v[0];
    result.leading.push_back(before);
    Generator g = Generator::reflect(violated->alpha);
    v = g.apply(lattice, v);
    result.phi.append(lattice, std::move(g));
    ++result.steps;
    if (abs_value(v[0]) >= before)
      throw TheoremViolation("no-descent", "a wall reflection failed to decrease |a_0|");
  }
  result.leading.push_back(v[0]);
  result.reached_canonical = v == kappa(n);
  if (n <= kMaxChamberRank && !result.reached_canonical)
    throw TheoremViolation("theorem-violation",
                           "chamber descent ended at " + v.str() + " instead of kappa_" + std::to_string(n));
  return result;
}

LatticeVector stabilize(const LatticeVector& k) {
  const std::size_t n = rank_n(k);
  if (n + 1 > kMaxChamberRank)
    throw DomainError("unsupported-rank", "stabilization target rank exceeds 8");
  if (!inside_fundamental_chamber(k))
    throw DomainError("not-in-chamber", k.str() + " is not in the fundamental chamber C_" + std::to_string(n));
  std::vector<Int> coords = k.values();
  coords.push_back(-1);
  LatticeVector out(std::move(coords));
  if (square(Lattice::diagonal(n + 1), out) <= 0 || !inside_by_all_walls(out))
    throw TheoremViolation("theorem-violation", out.str() + " left the fundamental chamber after adding -e_{n+1}");
  return out;
}

std::vector<E8Pair> e8_wall_bijection() {
  const Lattice lattice = Lattice::diagonal(8);
  const LatticeVector k8 = kappa(8);
  std::vector<E8Pair> out;
  for (auto& wall : fundamental_walls(8)) {
    LatticeVector gamma = wall.alpha - k8;
    if (square(lattice, gamma) != -2 || inner_product(lattice, gamma, k8) != 0)
      throw TheoremViolation("theorem-violation", "alpha - kappa_8 is not a root of kappa_8^perp");
    out.push_back({wall.alpha, std::move(gamma)});
  }
  return out;
}

namespace {

struct ExtGcd {
  Int g, s, t;
};

ExtGcd ext_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = checked::sub(old_r, checked::mul(q, r));
    std::swap(old_r, r);
    old_s = checked::sub(old_s, checked::mul(q, s));
    std::swap(old_s, s);
    old_t = checked::sub(old_t, checked::mul(q, t));
    std::swap(old_t, t);
  }
  return {old_r, old_s, old_t};
}

}  // namespace

LatticeVector adjust_certificate(const LatticeVector& k, const LatticeVector& delta) {
  const Lattice lattice = Lattice::diagonal(rank_n(k));
  if (inner_product(lattice, delta, k) != 1)
    throw DomainError("bad-certificate", "delta.kappa must equal 1");
  const Int qd = square(lattice, delta);
  if (qd % 2 == 0) throw TheoremViolation("theorem-violation", "q(delta) is even although kappa is characteristic");
  // q(delta + t kappa) = q(delta) + 2t when q(kappa) = 0 and delta.kappa = 1.
  const Int t = (1 - qd) / 2;
  return delta + t * k;
}

namespace {

// Extended gcd solution of delta.k = 1, adjusted to q(delta) = 1.
LatticeVector gcd_certificate(const Lattice& lattice, const LatticeVector& k) {
  const std::size_t n = lattice.negative_rank();
  // delta.k = sum c_i delta_i with c = G k.
  LatticeVector delta = LatticeVector::zero(n + 1);
  Int g = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const Int c = i == 0 ? k[0] : checked::neg(k[i]);
    if (c == 0) continue;
    const auto e = ext_gcd(g, c);
    delta = e.s * delta;
    delta[i] = checked::add(delta[i], e.t);
    g = e.g;
  }
  if (g < 0) {
    delta = -delta;
    g = -g;
  }
  if (g != 1) throw TheoremViolation("theorem-violation", "gcd of a primitive vector is not 1");
  return adjust_certificate(k, delta);
}

}  // namespace

// The gcd solution is built for the endpoint of the Cremona descent, where
// the coordinates are small, and carried back by the inverse word.
LatticeVector hyperbolic_certificate(const LatticeVector& k) {
  const std::size_t n = rank_n(k);
  if (n != kMaxChamberRank + 1) throw DomainError("unsupported-rank", "the certificate lives in Lambda_9");
  const Lattice lattice = Lattice::diagonal(n);
  if (!is_characteristic(lattice, k)) throw DomainError("not-characteristic", k.str() + " is not characteristic");
  if (square(lattice, k) != 0) throw DomainError("wrong-square", "q(kappa) must be 0");
  if (k.content() != 1) throw DomainError("not-primitive", k.str() + " is not primitive");

  const auto descent = canonicalize(k);
  LatticeVector out = gcd_certificate(lattice, descent.target);
  // Every generator is an involution.
  const auto& word = descent.phi.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = it->apply(lattice, out);
  if (inner_product(lattice, out, k) != 1 || square(lattice, out) != 1)
    throw TheoremViolation("theorem-violation", "certificate does not span a unimodular hyperbolic pair");
  return out;
}

}  // namespace hyperlat
