#include "hyperlat/resolution_graph.hpp"

#include <algorithm>
#include <numeric>

namespace hyperlat {

Cycle Cycle::unit(std::size_t n, std::size_t i) {
  Cycle c = zero(n);
  c.mult_.at(i) = 1;
  return c;
}

bool Cycle::is_zero() const {
  return std::all_of(mult_.begin(), mult_.end(), [](Int m) { return m == 0; });
}

bool Cycle::is_reduced() const {
  return std::all_of(mult_.begin(), mult_.end(), [](Int m) { return m == 0 || m == 1; });
}

Int Cycle::total() const {
  Int s = 0;
  for (Int m : mult_) s = checked::add(s, m);
  return s;
}

std::vector<std::size_t> Cycle::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] != 0) out.push_back(i);
  return out;
}

bool Cycle::dominated_by(const Cycle& other) const {
  if (other.size() != size()) throw DomainError("dimension-mismatch", "cycles on different graphs");
  for (std::size_t i = 0; i < size(); ++i)
    if (mult_[i] > other.mult_[i]) return false;
  return true;
}

std::string Cycle::str() const { return LatticeVector(mult_).str(); }

std::vector<std::vector<std::size_t>> connected_components(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!seen[j] && j != comp[k] && m(comp[k], j) != 0) {
          seen[j] = 1;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

DualGraph DualGraph::create(std::vector<Vertex> vertices, const IntMatrix& intersections, bool concurrent) {
  const std::size_t n = vertices.size();
  if (n == 0) throw InputError("empty-graph", "a dual graph needs at least one vertex");
  if (intersections.rows() != n || intersections.cols() != n)
    throw InputError("bad-graph", "intersection matrix size does not match the vertex count");
  if (!intersections.is_symmetric()) throw InputError("bad-graph", "intersection matrix is not symmetric");
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices[i].self_int != intersections(i, i))
      throw InputError("bad-graph", "diagonal disagrees with vertex self-intersection");
    if (vertices[i].self_int > -1)
      throw DomainError("invalid-graph", "vertex " + std::to_string(i) + " has self-intersection >= 0");
    if (vertices[i].genus < 0) throw InputError("bad-graph", "negative genus");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && intersections(i, j) < 0) throw InputError("bad-graph", "negative edge multiplicity");
  }
  if (connected_components(intersections).size() != 1)
    throw DomainError("disconnected-graph", "the dual graph of one singular point is connected");
  if (signature(intersections) != Signature{0, n, 0})
    throw DomainError("not-negative-definite", "the intersection matrix of a contractible configuration is negative definite");
  DualGraph g;
  g.vertices_ = std::move(vertices);
  g.matrix_ = intersections;
  g.concurrent_ = concurrent;
  return g;
}

DualGraph DualGraph::from_edges(std::vector<Vertex> vertices, const std::vector<Edge>& edges, bool concurrent) {
  const std::size_t n = vertices.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = vertices[i].self_int;
  for (const auto& e : edges) {
    if (e.i >= n || e.j >= n || e.i == e.j) throw InputError("bad-graph", "edge endpoint out of range or a loop");
    if (e.m < 0) throw InputError("bad-graph", "negative edge multiplicity");
    if (m(e.i, e.j) != 0) throw InputError("bad-graph", "duplicate edge");
    m(e.i, e.j) = m(e.j, e.i) = e.m;
  }
  return create(std::move(vertices), m, concurrent);
}

DualGraph DualGraph::with_vertices(std::vector<Vertex> vertices) const {
  if (vertices.size() != size()) throw InputError("bad-graph", "vertex count changed");
  for (std::size_t i = 0; i < size(); ++i) {
    if (vertices[i].self_int != vertices_[i].self_int)
      throw InputError("bad-graph", "self-intersections must be kept");
    if (vertices[i].genus < 0) throw InputError("bad-graph", "negative genus");
  }
  DualGraph g = *this;
  g.vertices_ = std::move(vertices);
  return g;
}

DualGraph DualGraph::induced(const std::vector<std::size_t>& subset) const {
  IntMatrix m(subset.size(), subset.size());
  std::vector<Vertex> vs;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    vs.push_back(vertex(subset[a]));
    for (std::size_t b = 0; b < subset.size(); ++b) m(a, b) = matrix_(subset[a], subset[b]);
  }
  return create(std::move(vs), m, concurrent_);
}

Int DualGraph::canonical_degree(std::size_t i) const {
  const auto& v = vertex(i);
  return 2 * v.genus - 2 - v.self_int;
}

bool DualGraph::has_exceptional_curve() const {
  return std::any_of(vertices_.begin(), vertices_.end(),
                     [](const Vertex& v) { return v.genus == 0 && v.self_int == -1; });
}

namespace {

void require_same_size(const DualGraph& g, const Cycle& z) {
  if (z.size() != g.size()) throw DomainError("dimension-mismatch", "cycle does not live on this graph");
}

}  // namespace

Int intersect(const DualGraph& g, const Cycle& z, std::size_t i) {
  require_same_size(g, z);
  Int s = 0;
  for (std::size_t j = 0; j < g.size(); ++j)
    if (z[j] != 0) s = checked::add(s, checked::mul(z[j], g.intersection(i, j)));
  return s;
}

Int intersect(const DualGraph& g, const Cycle& a, const Cycle& b) {
  require_same_size(g, b);
  Int s = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (a[i] != 0) s = checked::add(s, checked::mul(a[i], intersect(g, b, i)));
  return s;
}

Int canonical_degree(const DualGraph& g, const Cycle& z) {
  require_same_size(g, z);
  Int s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) s = checked::add(s, checked::mul(z[i], g.canonical_degree(i)));
  return s;
}

Int arithmetic_genus(const DualGraph& g, const Cycle& z) {
  if (z.is_zero()) throw DomainError("zero-cycle", "arithmetic genus needs a nonzero effective cycle");
  for (Int m : z.values())
    if (m < 0) throw DomainError("not-effective", "cycle " + z.str() + " has a negative multiplicity");
  const Int twice = checked::add(canonical_degree(g, z), intersect(g, z, z));
  if (twice % 2 != 0) throw TheoremViolation("theorem-violation", "K.Z + Z^2 is odd for " + z.str());
  return 1 + twice / 2;
}

namespace {

template <class Choose>
FundamentalCycle run_sequence(const DualGraph& g, std::size_t start, Choose choose) {
  FundamentalCycle out{Cycle::unit(g.size(), start), {start}};
  std::vector<Int> dots(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) dots[i] = g.intersection(i, start);
  std::vector<std::size_t> admissible;
  constexpr std::size_t kStepLimit = std::size_t{1} << 24;
  for (;;) {
    admissible.clear();
    for (std::size_t i = 0; i < g.size(); ++i)
      if (dots[i] > 0) admissible.push_back(i);
    if (admissible.empty()) break;
    const std::size_t a = choose(admissible);
    out.z0[a] += 1;
    out.sequence.push_back(a);
    for (std::size_t i = 0; i < g.size(); ++i) dots[i] = checked::add(dots[i], g.intersection(i, a));
    if (out.sequence.size() > kStepLimit)
      throw TheoremViolation("theorem-violation", "computation sequence does not terminate");
  }
  return out;
}

}  // namespace

FundamentalCycle fundamental_cycle(const DualGraph& g) {
  return run_sequence(g, 0, [](const std::vector<std::size_t>& a) { return a.front(); });
}

FundamentalCycle fundamental_cycle(const DualGraph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> start(0, g.size() - 1);
  return run_sequence(g, start(rng), [&](const std::vector<std::size_t>& a) {
    std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
    return a[pick(rng)];
  });
}

bool is_rational(const DualGraph& g) { return arithmetic_genus(g, fundamental_cycle(g).z0) <= 0; }

std::string to_string(MEKind kind) {
  switch (kind) {
    case MEKind::simple_elliptic: return "simple_elliptic";
    case MEKind::cusp: return "cusp";
    case MEKind::triangle: return "triangle";
    case MEKind::non_reduced: return "non_reduced";
  }
  return "unknown";
}

namespace {

// Calls visit(Z) for every 0 < Z <= bound in odometer order until it returns
// false. Returns false iff stopped early.
template <class Visit>
bool for_each_subcycle(const Cycle& bound, Visit visit) {
  Cycle z = Cycle::zero(bound.size());
  for (;;) {
    std::size_t i = 0;
    while (i < z.size() && z[i] == bound[i]) z[i++] = 0;
    if (i == z.size()) return true;
    ++z[i];
    if (!visit(z)) return false;
  }
}

bool proper_subcycles_nonpositive(const DualGraph& g, const Cycle& z0) {
  return for_each_subcycle(z0, [&](const Cycle& z) { return z == z0 || arithmetic_genus(g, z) <= 0; });
}

void require_minimal(const DualGraph& g) {
  if (g.has_exceptional_curve())
    throw DomainError("not-minimal", "the minimal resolution contracts no exceptional curve");
}

MEKind reduced_kind(const DualGraph& g, const Cycle& z0) {
  const auto supp = z0.support();
  if (supp.size() == 1) {
    switch (g.vertex(supp[0]).sing) {
      case Singularity::node: return MEKind::cusp;
      case Singularity::cusp: return MEKind::triangle;
      default: return MEKind::simple_elliptic;
    }
  }
  for (std::size_t i : supp)
    if (g.vertex(i).genus != 0)
      throw TheoremViolation("theorem-violation", "reduced minimally elliptic cycle with an irrational component");
  if (g.concurrent() && supp.size() <= 3) return MEKind::triangle;
  return MEKind::cusp;
}

}  // namespace

std::optional<MEKind> classify_minimally_elliptic(const DualGraph& g) {
  require_minimal(g);
  const Cycle z0 = fundamental_cycle(g).z0;
  if (arithmetic_genus(g, z0) != 1) return std::nullopt;
  if (!proper_subcycles_nonpositive(g, z0)) return std::nullopt;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (canonical_degree(g, Cycle::unit(g.size(), i)) + intersect(g, z0, i) != 0)
      throw TheoremViolation("theorem-violation", "(K+Z0).D_i != 0 on a minimally elliptic cycle");
  if (z0.is_reduced()) return reduced_kind(g, z0);
  for (const auto& v : g.vertices())
    if (v.genus != 0)
      throw TheoremViolation("theorem-violation", "non-reduced minimally elliptic cycle with an irrational component");
  return MEKind::non_reduced;
}

namespace {

void require_rational(const DualGraph& g, const Cycle& z0) {
  if (arithmetic_genus(g, z0) > 0)
    throw DomainError("not-rational", "p_a(Z0) > 0: the singularity is not rational");
}

}  // namespace

Multiplicity multiplicity(const DualGraph& g) {
  const Cycle z0 = fundamental_cycle(g).z0;
  require_rational(g, z0);
  const Int m = -intersect(g, z0, z0);
  return {m, m == 1};
}

std::vector<std::size_t> peel_sequence(const DualGraph& g) {
  Cycle z = fundamental_cycle(g).z0;
  require_rational(g, z);
  std::vector<std::size_t> peeled;
  while (!z.is_zero()) {
    std::optional<std::size_t> pick;
    for (std::size_t i : z.support())
      if (g.canonical_degree(i) + intersect(g, z, i) < 0) {
        pick = i;
        break;
      }
    if (!pick)
      throw TheoremViolation("peel-selection", "no component B with (K+Z).B < 0 although p_a(Z) <= 0");
    peeled.push_back(*pick);
    z[*pick] -= 1;
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

NonrationalityCertificate nonrationality_certificate(const DualGraph& g) {
  require_minimal(g);
  const Cycle z0 = fundamental_cycle(g).z0;
  NonrationalityCertificate cert;
  if (arithmetic_genus(g, z0) <= 0) return cert;
  cert.rational = false;

  std::vector<Cycle> candidates;
  for_each_subcycle(z0, [&](const Cycle& z) {
    candidates.push_back(z);
    return true;
  });
  std::sort(candidates.begin(), candidates.end(), [](const Cycle& a, const Cycle& b) {
    const Int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a.values() < b.values();
  });
  auto found = std::find_if(candidates.begin(), candidates.end(),
                            [&](const Cycle& z) { return arithmetic_genus(g, z) >= 1; });
  if (found == candidates.end()) throw TheoremViolation("theorem-violation", "p_a(Z0) >= 1 but no subcycle found");
  cert.d = *found;

  const auto supp = cert.d.support();
  IntMatrix principal(supp.size(), supp.size());
  for (std::size_t a = 0; a < supp.size(); ++a)
    for (std::size_t b = 0; b < supp.size(); ++b) principal(a, b) = g.intersection(supp[a], supp[b]);
  if (connected_components(principal).size() != 1)
    throw TheoremViolation("theorem-violation", "minimal cycle with p_a >= 1 is disconnected");
  for (std::size_t j = 0; j < g.size(); ++j) {
    const Int v = g.canonical_degree(j) + intersect(g, cert.d, j);
    if (v < 0) throw TheoremViolation("theorem-violation", "(K+D).D_j < 0 for the minimal cycle D");
    if (v == 0 && cert.d[j] != 0) cert.e_set.push_back(j);
  }
  if (cert.e_set.empty()) return cert;
  if (cert.e_set != supp)
    throw TheoremViolation("theorem-violation", "(K+D).D_j vanishes on part of Supp(D) only");
  const DualGraph sub = g.induced(supp);
  Cycle local = Cycle::zero(supp.size());
  for (std::size_t a = 0; a < supp.size(); ++a) local[a] = cert.d[supp[a]];
  if (fundamental_cycle(sub).z0 != local)
    throw TheoremViolation("theorem-violation", "D is not the fundamental cycle of its support");
  cert.me_kind = classify_minimally_elliptic(sub);
  if (!cert.me_kind) throw TheoremViolation("theorem-violation", "Supp(D) is not minimally elliptic");
  return cert;
}

}  // namespace hyperlat
