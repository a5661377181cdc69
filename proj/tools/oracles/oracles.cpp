#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace hyperlat::oracle {

namespace {

// Visits every (x_1..x_m) with entries in `values` and sum of squares equal
// to `squares`; `sum_target` (if set) fixes the plain sum too.
void spatial_search(std::vector<Int>& x, std::size_t i, Int squares_left, Int sum_left, bool fix_sum,
                    const std::vector<Int>& values, const std::function<void(const std::vector<Int>&)>& visit) {
  const Int remaining = static_cast<Int>(x.size() - i);
  if (remaining == 0) {
    if (squares_left == 0 && (!fix_sum || sum_left == 0)) visit(x);
    return;
  }
  // Cauchy-Schwarz: (sum of the rest)^2 <= remaining * (squares of the rest).
  if (fix_sum && sum_left * sum_left > remaining * squares_left) return;
  for (Int v : values) {
    if (v * v > squares_left) continue;
    x[i] = v;
    spatial_search(x, i + 1, squares_left - v * v, sum_left - v, fix_sum, values, visit);
  }
  x[i] = 0;
}

}  // namespace

std::vector<LatticeVector> brute_force_walls(std::size_t n, Int bound) {
  std::vector<Int> values;
  for (Int v = -bound; v <= bound; ++v) values.push_back(v);
  std::vector<LatticeVector> out;
  std::vector<Int> x(n, 0);
  for (Int a0 = -bound; a0 <= bound; ++a0) {
    // q = a0^2 - sum x^2 = -1 and 3 a0 + sum x = 1.
    spatial_search(x, 0, a0 * a0 + 1, 1 - 3 * a0, true, values, [&](const std::vector<Int>& s) {
      std::vector<Int> c{a0};
      c.insert(c.end(), s.begin(), s.end());
      out.emplace_back(std::move(c));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_characteristic(std::size_t n, Int target, Int height,
                             const std::function<void(const LatticeVector&)>& visit) {
  std::vector<Int> odd;
  for (Int v = -height; v <= height; ++v)
    if (v % 2 != 0) odd.push_back(v);
  std::vector<Int> x(n, 0);
  for (Int a0 : odd) {
    const Int squares = a0 * a0 - target;
    if (squares < static_cast<Int>(n)) continue;
    spatial_search(x, 0, squares, 0, false, odd, [&](const std::vector<Int>& s) {
      std::vector<Int> c{a0};
      c.insert(c.end(), s.begin(), s.end());
      visit(LatticeVector(std::move(c)));
    });
  }
}

namespace {

bool connected(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> stack{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && m(i, j) != 0) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
  }
  return count == n;
}

// Negative definite iff every leading principal minor of -m is positive.
// Fraction-free (Bareiss) elimination: after step k the pivot a[k][k] is the
// leading (k+1)-minor. Entries are minors of a small matrix, so int64 is ample.
bool negative_definite(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -m(i, j);
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = checked::sub(checked::mul(a[k][k], a[i][j]), checked::mul(a[i][k], a[k][j])) / prev;
    prev = a[k][k];
  }
  return true;
}

std::vector<Int> canonical_code(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Int> best;
  do {
    bool keeps_diagonal = true;
    for (std::size_t a = 0; a < n && keeps_diagonal; ++a) keeps_diagonal = m(p[a], p[a]) == m(a, a);
    if (!keeps_diagonal) continue;
    std::vector<Int> code;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) code.push_back(m(p[a], p[b]));
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace

std::vector<IntMatrix> graph_corpus(std::size_t max_vertices, Int lo, Int hi, Int max_edge) {
  std::vector<IntMatrix> out;
  for (std::size_t k = 1; k <= max_vertices; ++k) {
    std::set<std::vector<Int>> seen;
    std::vector<Int> diag(k);
    const std::size_t pairs = k * (k - 1) / 2;
    std::function<void(std::size_t, Int)> pick_diag = [&](std::size_t i, Int top) {
      if (i < k) {
        for (Int v = top; v >= lo; --v) {
          diag[i] = v;
          pick_diag(i + 1, v);
        }
        return;
      }
      std::vector<Int> edges(pairs, 0);
      for (;;) {
        IntMatrix m(k, k);
        std::size_t e = 0;
        for (std::size_t a = 0; a < k; ++a) {
          m(a, a) = diag[a];
          for (std::size_t b = a + 1; b < k; ++b, ++e) m(a, b) = m(b, a) = edges[e];
        }
        if (connected(m) && negative_definite(m)) {
          std::vector<Int> code = diag;
          const auto c = canonical_code(m);
          code.insert(code.end(), c.begin(), c.end());
          if (seen.insert(std::move(code)).second) out.push_back(std::move(m));
        }
        std::size_t j = 0;
        while (j < pairs && edges[j] == max_edge) edges[j++] = 0;
        if (j == pairs) break;
        ++edges[j];
      }
    };
    pick_diag(0, hi);
  }
  return out;
}

Cycle minimal_anti_nef_cycle(const IntMatrix& m, Int bound) {
  return minimal_anti_nef_cycle(m, Cycle(std::vector<Int>(m.rows(), bound)));
}

Cycle minimal_anti_nef_cycle(const IntMatrix& m, const Cycle& bound) {
  const std::size_t n = m.rows();
  std::vector<Int> z(n, 0), dots(n, 0), best(bound.values());
  bool found = false;
  for (;;) {
    std::size_t i = 0;
    while (i < n && z[i] == bound[i]) {
      for (std::size_t r = 0; r < n; ++r) dots[r] -= bound[i] * m(r, i);
      z[i++] = 0;
    }
    if (i == n) break;
    ++z[i];
    for (std::size_t r = 0; r < n; ++r) dots[r] += m(r, i);
    if (std::all_of(dots.begin(), dots.end(), [](Int d) { return d <= 0; })) {
      found = true;
      for (std::size_t r = 0; r < n; ++r) best[r] = std::min(best[r], z[r]);
    }
  }
  return found ? Cycle(best) : Cycle::zero(n);
}

namespace {

Int k_dot(const DualGraph& g, std::size_t i) {
  return 2 * g.vertex(i).genus - 2 - g.intersection(i, i);
}

}  // namespace

// Cycles are visited by increasing total multiplicity, so a small cycle of
// positive genus is found before the bulk of the box.
bool all_subcycles_nonpositive(const DualGraph& g, const Cycle& bound) {
  const std::size_t n = g.size();
  std::vector<Int> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + bound[i];
  std::vector<Int> dots(n, 0);
  Int kz = 0, zz = 0;
  // Adds v copies of D_i to the current cycle (v may be negative).
  auto add = [&](std::size_t i, Int v) {
    zz += 2 * v * dots[i] + v * v * g.intersection(i, i);
    kz += v * k_dot(g, i);
    for (std::size_t r = 0; r < n; ++r) dots[r] += v * g.intersection(r, i);
  };
  // p_a = 1 + (kz + zz)/2 <= 0 for every completion with `left` still to place.
  std::function<bool(std::size_t, Int)> fill = [&](std::size_t i, Int left) {
    if (i + 1 == n) {
      add(i, left);
      const bool ok = kz + zz < 0;
      add(i, -left);
      return ok;
    }
    const Int lo = std::max<Int>(0, left - suffix[i + 1]);
    const Int hi = std::min(bound[i], left);
    add(i, lo);
    for (Int v = lo;; ++v) {
      if (!fill(i + 1, left - v)) {
        add(i, -v);
        return false;
      }
      if (v == hi) break;
      add(i, 1);
    }
    add(i, -hi);
    return true;
  };
  for (Int t = 1; t <= suffix[0]; ++t)
    if (!fill(0, t)) return false;
  return true;
}

bool peel_sequence_valid(const DualGraph& g, const std::vector<std::size_t>& seq, const Cycle& z0) {
  const std::size_t n = g.size();
  std::vector<Int> c(n, 0);
  for (std::size_t b : seq) {
    if (b >= n) return false;
    ++c[b];
    Int bc = 0;
    for (std::size_t j = 0; j < n; ++j) bc += c[j] * g.intersection(b, j);
    if (bc > g.intersection(b, b) + 1) return false;
  }
  return !seq.empty() && c == z0.values();
}

bool numerically_minimally_elliptic(const DualGraph& g, const Cycle& z0) {
  const std::size_t n = g.size();
  Int kz = 0, zz = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Int dot = 0;
    for (std::size_t j = 0; j < n; ++j) dot += z0[j] * g.intersection(i, j);
    if (k_dot(g, i) + dot != 0) return false;
    kz += z0[i] * k_dot(g, i);
    zz += z0[i] * dot;
  }
  return kz + zz == 0;
}

std::vector<std::vector<Int>> genus_assignments(std::size_t n) {
  std::vector<std::vector<Int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Int> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = (mask >> i) & 1;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Generator> random_word(std::size_t n, std::size_t max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> length(1, max_length);
  std::uniform_int_distribution<std::size_t> coord(1, n);
  std::uniform_int_distribution<int> kind(0, 4);
  auto distinct = [&](std::size_t count) {
    std::vector<std::size_t> idx;
    while (idx.size() < count) {
      const std::size_t c = coord(rng);
      if (std::find(idx.begin(), idx.end(), c) == idx.end()) idx.push_back(c);
    }
    return idx;
  };
  std::vector<Generator> word;
  const std::size_t len = length(rng);
  while (word.size() < len) {
    switch (kind(rng)) {
      case 0: word.push_back(Generator::negate()); break;
      case 1: word.push_back(Generator::flip(coord(rng))); break;
      case 2:
        if (n >= 2) {
          auto idx = distinct(2);
          word.push_back(Generator::swap(std::min(idx[0], idx[1]), std::max(idx[0], idx[1])));
        }
        break;
      default: {
        const std::size_t count = kind(rng) % 2 == 0 ? 2 : 3;
        if (n < count) break;
        LatticeVector v = LatticeVector::unit(n + 1, 0);
        for (std::size_t i : distinct(count)) v[i] = -1;
        word.push_back(Generator::reflect(std::move(v)));
      }
    }
  }
  return word;
}

}  // namespace hyperlat::oracle
