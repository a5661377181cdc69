#include "hyperlat/nef_pipeline.hpp"

#include <algorithm>

namespace hyperlat {

namespace {

void require_rank(const Lattice& lattice, const LatticeVector& v, const char* what) {
  if (v.rank() != lattice.rank())
    throw InputError("dimension-mismatch", std::string(what) + " has rank " + std::to_string(v.rank()) +
                                               ", the lattice has rank " + std::to_string(lattice.rank()));
}

IntMatrix curve_gram(const SurfaceModel& model, const std::vector<std::size_t>& idx) {
  IntMatrix m(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      m(a, b) = inner_product(model.lattice(), model.curves()[idx[a]].cls, model.curves()[idx[b]].cls);
  return m;
}

DualGraph curve_graph(const SurfaceModel& model, const std::vector<std::size_t>& idx) {
  std::vector<Vertex> vs;
  for (std::size_t i : idx) {
    const auto& c = model.curves()[i];
    vs.push_back({square(model.lattice(), c.cls), c.pa, Singularity::unspecified});
  }
  return DualGraph::create(std::move(vs), curve_gram(model, idx));
}

// Connected pieces of the curve subset, as indices into the model.
std::vector<std::vector<std::size_t>> curve_components(const SurfaceModel& model,
                                                       const std::vector<std::size_t>& idx) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& comp : connected_components(curve_gram(model, idx))) {
    std::vector<std::size_t> mapped;
    for (std::size_t a : comp) mapped.push_back(idx[a]);
    out.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace

SurfaceModel SurfaceModel::create(IntMatrix gram, LatticeVector k, LatticeVector e, std::vector<Curve> curves) {
  SurfaceModel model(Lattice::from_gram(std::move(gram)));
  const Lattice& L = model.lattice_;
  require_rank(L, k, "K");
  require_rank(L, e, "E");
  for (const auto& c : curves) require_rank(L, c.cls, "curve class");

  if (signature(L) != Signature{1, L.rank() - 1, 0})
    throw DomainError("signature", "Hodge index theorem: the form must have signature (1, rho-1)");
  if (!is_characteristic(L, k))
    throw DomainError("not-characteristic", "K.x + x^2 must be even (adjunction parity)");
  if (square(L, k) <= 0) throw DomainError("not-general-type", "K^2 > 0 fails");
  if (square(L, e) != -1 || inner_product(L, k, e) != 1)
    throw DomainError("bad-exceptional-class", "E^2 = -1 and E.K = 1 are required");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    if (c.pa < 0) throw InputError("bad-curve", "negative arithmetic genus");
    const Int kc = inner_product(L, k, c.cls);
    if (kc < 0) throw DomainError("k-not-nef", "K.C < 0 for curve " + std::to_string(i) + " on a minimal surface");
    if (kc + square(L, c.cls) != 2 * c.pa - 2)
      throw DomainError("adjunction", "K.C + C^2 != 2p_a(C) - 2 for curve " + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j)
      if (inner_product(L, c.cls, curves[j].cls) < 0)
        throw DomainError("curve-intersection", "distinct irreducible curves " + std::to_string(j) + " and " +
                                                    std::to_string(i) + " meet negatively");
  }
  model.k_ = std::move(k);
  model.e_ = std::move(e);
  model.curves_ = std::move(curves);
  return model;
}

std::vector<std::size_t> SurfaceModel::delta() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < curves_.size(); ++i)
    if (curves_[i].pa == 0 && square(lattice_, curves_[i].cls) == -2) out.push_back(i);
  return out;
}

SurfaceModel SurfaceModel::with_exceptional(LatticeVector e) const {
  return create(lattice_.gram_matrix(), k_, std::move(e), curves_);
}

QDivisor::QDivisor(LatticeVector numerator, Int denominator) : num_(std::move(numerator)), den_(denominator) {
  if (den_ == 0) throw DomainError("zero-denominator", "rational divisor with denominator 0");
  if (den_ < 0) {
    num_ = -num_;
    den_ = checked::neg(den_);
  }
  const Int g = std::gcd(num_.content(), den_);
  if (g > 1) {
    for (std::size_t i = 0; i < num_.rank(); ++i) num_[i] /= g;
    den_ /= g;
  }
}

Rational QDivisor::dot(const Lattice& lattice, const LatticeVector& x) const {
  return Rational(inner_product(lattice, num_, x)) / den_;
}

Rational QDivisor::square(const Lattice& lattice) const {
  return Rational(hyperlat::square(lattice, num_)) / (BigInt(den_) * den_);
}

bool same_cone_component(const Lattice& lattice, const LatticeVector& x, const LatticeVector& y) {
  if (x.is_zero() || y.is_zero()) throw DomainError("not-in-cone", "zero vector");
  if (square(lattice, x) < 0 || square(lattice, y) < 0)
    throw DomainError("not-in-cone", "negative square: not in the closed positive cone");
  return inner_product(lattice, x, y) >= 0;
}

DominantReflection reflect_to_dominant(const SurfaceModel& model) {
  const auto delta = model.delta();
  const Lattice& L = model.lattice();
  if (!delta.empty() && signature(curve_gram(model, delta)) != Signature{0, delta.size(), 0})
    throw DomainError("delta-not-definite", "the (-2)-curves must span a negative definite sublattice");

  DominantReflection out{Isometry::identity(L.rank()), model.exceptional(), 0};
  constexpr std::size_t kStepLimit = 100000;
  for (;;) {
    auto it = std::find_if(delta.begin(), delta.end(), [&](std::size_t i) {
      return inner_product(L, out.e, model.curves()[i].cls) < 0;
    });
    if (it == delta.end()) break;
    Generator g = Generator::reflect(model.curves()[*it].cls);
    out.e = g.apply(L, out.e);
    out.gamma.append(L, std::move(g));
    if (++out.steps > kStepLimit)
      throw TheoremViolation("theorem-violation", "reflection walk in a finite Weyl group does not terminate");
  }
  if (out.gamma.apply(model.canonical()) != model.canonical())
    throw TheoremViolation("theorem-violation", "reflections in (-2)-curves moved K");
  return out;
}

std::string to_string(Case2Branch branch) {
  switch (branch) {
    case Case2Branch::me_contraction: return "me_contraction";
    case Case2Branch::rational_only: return "rational_only";
    case Case2Branch::excluded: return "excluded";
  }
  return "unknown";
}

Case2Values case2_values(Int b, Int e, Int pa, Int d) {
  if (b < 0 || e >= 0 || d < 1 || pa < 0)
    throw DomainError("case2-hypothesis", "Case II needs K.D >= 0, D^2 < 0, d = -E.D >= 1");
  if (b + e != 2 * pa - 2) throw DomainError("adjunction", "K.D + D^2 != 2p_a(D) - 2");
  Case2Values out;
  out.lambda = Rational(1, d);
  out.value = Rational(b) + Rational(e, d);
  const Rational printed = Rational(2 * pa - 2) - (Rational(1) - Rational(1, d)) * e;
  if (printed != out.value) throw TheoremViolation("theorem-violation", "the two forms of M'.D disagree");

  if (pa == 0 && e == -3 && d == 2) {
    out.branch = Case2Branch::excluded;
    out.citation = "(D-E)^2 = -3 + 4 - 1 = 0 contradicts the Hodge index theorem";
  } else if (pa == 1 && d == 1) {
    out.branch = Case2Branch::me_contraction;
    out.citation = "M'.D = 0 iff p_a(D) = 1 and d = 1";
  } else if (out.value >= 0) {
    out.branch = Case2Branch::rational_only;
    out.citation = "M'.D >= 0";
  } else {
    throw DomainError("case2-hypothesis", "M'.D = " + to_string(out.value) + " < 0 for (p_a, D^2, d) = (" +
                                              std::to_string(pa) + ", " + std::to_string(e) + ", " +
                                              std::to_string(d) + ")");
  }
  return out;
}

ContractionReport classify_contraction(const SurfaceModel& model, const QDivisor& m) {
  const Lattice& L = model.lattice();
  if (m.square(L) <= 0) throw DomainError("not-big", "M^2 > 0 fails");
  ContractionReport report;
  for (std::size_t i = 0; i < model.curves().size(); ++i) {
    const Rational v = m.dot(L, model.curves()[i].cls);
    if (v < 0) throw DomainError("not-nef", "M.C < 0 for curve " + std::to_string(i));
    if (v == 0) report.contracted.push_back(i);
  }
  for (std::size_t i : report.contracted) {
    const auto& c = model.curves()[i];
    if (c.pa == 0 && square(L, c.cls) == -1)
      throw DomainError("exceptional-curve", "the contraction contracts no exceptional curve; curve " +
                                                 std::to_string(i) + " is one");
  }
  if (report.contracted.empty()) return report;
  for (auto& comp : curve_components(model, report.contracted)) {
    const DualGraph g = curve_graph(model, comp);
    ContractedComponent cc;
    cc.curves = std::move(comp);
    cc.rational = is_rational(g);
    if (cc.rational) {
      cc.multiplicity = multiplicity(g);
    } else {
      cc.me_kind = classify_minimally_elliptic(g);
      if (!cc.me_kind)
        throw TheoremViolation("theorem-violation", "contracted singular point is neither rational nor minimally elliptic");
    }
    report.components.push_back(std::move(cc));
  }
  return report;
}

namespace {

void check_result(const SurfaceModel& model, const QDivisor& m) {
  const Lattice& L = model.lattice();
  if (m.dot(L, model.exceptional()) != 0) throw TheoremViolation("theorem-violation", "M.E != 0");
  if (m.square(L) <= 0) throw TheoremViolation("theorem-violation", "M^2 > 0 fails");
  for (std::size_t i = 0; i < model.curves().size(); ++i)
    if (m.dot(L, model.curves()[i].cls) < 0)
      throw TheoremViolation("theorem-violation", "M is not nef on curve " + std::to_string(i));
}

}  // namespace

NefResult build_nef_orthogonal(const SurfaceModel& model) {
  const Lattice& L = model.lattice();
  const auto& K = model.canonical();
  const auto& E = model.exceptional();
  for (std::size_t i : model.delta())
    if (inner_product(L, E, model.curves()[i].cls) < 0)
      throw DomainError("not-dominant", "E.C < 0 for a (-2)-curve; apply reflect_to_dominant first");

  const LatticeVector ke = K + E;
  if (!same_cone_component(L, ke, K))
    throw TheoremViolation("theorem-violation", "(K+E).K = K^2 + 1 > 0 fails");

  NefResult out;
  std::vector<std::size_t> orthogonal;
  for (std::size_t i = 0; i < model.curves().size(); ++i) {
    const Int v = inner_product(L, ke, model.curves()[i].cls);
    if (v < 0 && !out.violating_curve) out.violating_curve = i;
    if (v < 0 && square(L, model.curves()[i].cls) >= 0)
      throw TheoremViolation("theorem-violation", "M.D < 0 forces D^2 < 0");
    if (v == 0) orthogonal.push_back(i);
  }

  if (!out.violating_curve) {
    out.case_number = 1;
    out.m = QDivisor(ke, 1);
    if (!orthogonal.empty() && signature(curve_gram(model, orthogonal)) != Signature{0, orthogonal.size(), 0})
      throw TheoremViolation("theorem-violation", "the curves orthogonal to K+E are not negative definite");
    for (const auto& comp : curve_components(model, orthogonal)) {
      const DualGraph g = curve_graph(model, comp);
      const auto cert = nonrationality_certificate(g);
      if (cert.rational) continue;
      LatticeVector sum = LatticeVector::zero(L.rank());
      for (std::size_t a = 0; a < comp.size(); ++a) {
        if (cert.d[a] == 0) continue;
        sum += cert.d[a] * model.curves()[comp[a]].cls;
        out.certificate_curves.push_back(comp[a]);
      }
      const Int e = -inner_product(L, sum, E);
      if (e <= 0) throw TheoremViolation("theorem-violation", "e = -sum a_i D_i.E must be positive");
      out.certificate = cert.d;
      out.m = QDivisor(e * K + sum, e);
      if (e > 1) {
        for (std::size_t i = 0; i < model.curves().size(); ++i) {
          const auto& c = model.curves()[i];
          if (out.m.dot(L, c.cls) == 0 && !(c.pa == 0 && square(L, c.cls) == -2))
            throw TheoremViolation("residual-curves",
                                   "curves orthogonal to M must be smooth rational (-2)-curves when e > 1");
        }
      }
      break;
    }
  } else {
    out.case_number = 2;
    const std::size_t idx = *out.violating_curve;
    const auto& D = model.curves()[idx];
    const Int b = inner_product(L, K, D.cls);
    const Int e = square(L, D.cls);
    const Int d = -inner_product(L, E, D.cls);
    out.case2 = case2_values(b, e, D.pa, d);
    if (out.case2->branch == Case2Branch::excluded)
      throw DomainError("excluded-case", "excluded-case: " + out.case2->citation);
    out.m = QDivisor(d * K + D.cls, d);
  }
  check_result(model, out.m);
  out.report = classify_contraction(model, out.m);
  return out;
}

}  // namespace hyperlat
