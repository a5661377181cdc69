#include <random>

#include <gtest/gtest.h>

#include "hyperlat/canonical.hpp"
#include "hyperlat/nef_pipeline.hpp"

namespace hyperlat {
namespace {

IntMatrix diagonal_gram(std::size_t n) {
  IntMatrix g = IntMatrix::identity(n + 1);
  for (std::size_t i = 1; i <= n; ++i) g(i, i) = -1;
  return g;
}

LatticeVector e(std::size_t n, std::size_t i) { return LatticeVector::unit(n + 1, i); }

SurfaceModel case_one_model() {
  const LatticeVector d{1, -1, -1, 0, 0, 0, 0, 0, -1};
  return SurfaceModel::create(diagonal_gram(8), kappa(8), e(8, 8), {{d, 0}});
}

SurfaceModel reflection_model() {
  return SurfaceModel::create(diagonal_gram(2), {5, -1, -1}, e(2, 1), {{{0, 1, -1}, 0}});
}

TEST(SurfaceModel, Validation) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& err) {
      return err.code();
    }
    return std::string("none");
  };
  EXPECT_EQ(code([] { SurfaceModel::create(IntMatrix::identity(2), {1, 1}, {1, 0}, {}); }), "signature");
  EXPECT_EQ(code([] { SurfaceModel::create(diagonal_gram(1), {2, 0}, {0, 1}, {}); }), "not-characteristic");
  EXPECT_EQ(code([] { SurfaceModel::create(diagonal_gram(9), kappa(9), e(9, 9), {}); }), "not-general-type");
  EXPECT_EQ(code([] { SurfaceModel::create(diagonal_gram(2), kappa(2), e(2, 0), {}); }), "bad-exceptional-class");
  EXPECT_EQ(code([] { SurfaceModel::create(diagonal_gram(2), kappa(2), e(2, 2), {{{0, -1, -1}, 0}}); }),
            "k-not-nef");
  EXPECT_EQ(code([] { SurfaceModel::create(diagonal_gram(2), kappa(2), e(2, 2), {{{0, 1, -1}, 1}}); }),
            "adjunction");
  EXPECT_EQ(code([] {
              SurfaceModel::create(diagonal_gram(2), kappa(2), e(2, 2), {{{0, 1, -1}, 0}, {{0, 1, -1}, 0}});
            }),
            "curve-intersection");
  EXPECT_THROW(SurfaceModel::create(diagonal_gram(2), {3, -1}, e(2, 2), {}), InputError);
  EXPECT_THROW(SurfaceModel::create(diagonal_gram(2), kappa(2), e(2, 2), {{{0, 1, -1}, -1}}), InputError);
}

// Basis K, E, D with p_a(D) = 0, D^2 = -3, E.D = -2: the Gram determinant
// -a e - a c^2 - e + 2 b c + b^2 equals -K^2 here, which a form of signature
// (1, 2) cannot have.
TEST(SurfaceModel, CaseTwoAttemptViolatesSignature) {
  for (Int a = 1; a <= 9; ++a) {
    const Int b = 1, c = -2, d2 = -3;
    EXPECT_EQ(-a * d2 - a * c * c - d2 + 2 * b * c + b * b, -a);
    const IntMatrix gram = IntMatrix::from_rows({{a, 1, b}, {1, -1, c}, {b, c, d2}});
    EXPECT_EQ(signature(gram), (Signature{2, 1, 0}));
    try {
      SurfaceModel::create(gram, e(2, 0), e(2, 1), {{e(2, 2), 0}});
      FAIL();
    } catch (const DomainError& err) {
      EXPECT_EQ(err.code(), "signature");
    }
  }
}

TEST(QDivisor, Reduction) {
  const QDivisor q({2, -4, 6}, -4);
  EXPECT_EQ(q.numerator(), (LatticeVector{-1, 2, -3}));
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(q.square(Lattice::diagonal(2)), Rational(1 - 4 - 9, 4));
  EXPECT_EQ(q.dot(Lattice::diagonal(2), {1, 0, 0}), Rational(-1, 2));
  EXPECT_THROW(QDivisor({1}, 0), DomainError);
}

TEST(SameConeComponent, Examples) {
  const Lattice L = Lattice::diagonal(2);
  EXPECT_TRUE(same_cone_component(L, {2, 1, 0}, {2, 1, 0}));
  EXPECT_FALSE(same_cone_component(L, {2, 1, 0}, {-2, -1, 0}));
  EXPECT_TRUE(same_cone_component(L, {1, 1, 0}, {1, 0, 1}));  // isotropic pair
  EXPECT_THROW(same_cone_component(L, {0, 1, 0}, {1, 0, 0}), DomainError);
  EXPECT_THROW(same_cone_component(L, {0, 0, 0}, {1, 0, 0}), DomainError);
  const SurfaceModel m = case_one_model();
  EXPECT_TRUE(same_cone_component(m.lattice(), m.canonical(), m.canonical() + m.exceptional()));
  EXPECT_EQ(inner_product(m.lattice(), m.canonical(), m.canonical() + m.exceptional()),
            square(m.lattice(), m.canonical()) + 1);
}

TEST(ReflectToDominant, EmptyDelta) {
  const SurfaceModel m = SurfaceModel::create(diagonal_gram(8), kappa(8), e(8, 8), {});
  const auto r = reflect_to_dominant(m);
  EXPECT_EQ(r.steps, 0u);
  EXPECT_EQ(r.e, m.exceptional());
  EXPECT_TRUE(r.gamma.word().empty());
}

TEST(ReflectToDominant, OneReflection) {
  const SurfaceModel m = reflection_model();
  const Lattice& L = m.lattice();
  const auto r = reflect_to_dominant(m);
  EXPECT_EQ(r.steps, 1u);
  EXPECT_EQ(r.e, e(2, 2));
  EXPECT_EQ(inner_product(L, r.e, m.curves()[0].cls), 1);
  EXPECT_EQ(square(L, r.e), -1);
  EXPECT_EQ(inner_product(L, r.e, m.canonical()), 1);
  EXPECT_EQ(r.gamma.apply(m.canonical()), m.canonical());
  EXPECT_TRUE(verify_isometry(r.gamma, L));
  const auto again = reflect_to_dominant(m.with_exceptional(r.e));
  EXPECT_EQ(again.steps, 0u);
  EXPECT_EQ(again.e, r.e);
}

// Two (-2)-classes D and -D meet twice: their span is degenerate.
TEST(ReflectToDominant, RejectsDegenerateDelta) {
  const LatticeVector d = e(2, 1) - e(2, 2);
  const SurfaceModel m = SurfaceModel::create(diagonal_gram(2), kappa(2), e(2, 2), {{d, 0}, {-d, 0}});
  try {
    reflect_to_dominant(m);
    FAIL();
  } catch (const DomainError& err) {
    EXPECT_EQ(err.code(), "delta-not-definite");
  }
}

// Random dominant chains of reflections preserve K, q(E) and K.E.
TEST(ReflectToDominant, PreservesInvariants) {
  std::mt19937_64 rng(73);
  const std::size_t n = 6;
  const Lattice L = Lattice::diagonal(n);
  // A_5 chain e1 - e2, ..., e5 - e6 of (-2)-curves orthogonal to kappa_6.
  std::vector<Curve> curves;
  for (std::size_t i = 1; i < n; ++i) curves.push_back({e(n, i) - e(n, i + 1), 0});
  std::uniform_int_distribution<std::size_t> pick(1, n);
  for (int t = 0; t < 50; ++t) {
    const SurfaceModel m = SurfaceModel::create(diagonal_gram(n), kappa(n), e(n, pick(rng)), curves);
    const auto r = reflect_to_dominant(m);
    EXPECT_TRUE(verify_isometry(r.gamma, L));
    EXPECT_EQ(r.gamma.apply(m.exceptional()), r.e);
    EXPECT_EQ(r.gamma.apply(m.canonical()), m.canonical());
    EXPECT_EQ(square(L, r.e), -1);
    EXPECT_EQ(inner_product(L, r.e, m.canonical()), 1);
    for (const auto& c : curves) EXPECT_GE(inner_product(L, r.e, c.cls), 0);
    EXPECT_EQ(r.e, e(n, n));
  }
}

TEST(Case2Values, Examples) {
  const auto a = case2_values(1, -1, 1, 1);
  EXPECT_EQ(a.value, 0);
  EXPECT_EQ(a.branch, Case2Branch::me_contraction);
  EXPECT_EQ(a.lambda, 1);

  const auto b = case2_values(3, -5, 0, 4);
  EXPECT_EQ(b.value, Rational(7, 4));
  EXPECT_EQ(b.lambda, Rational(1, 4));
  EXPECT_EQ(b.branch, Case2Branch::rational_only);

  const auto c = case2_values(1, -3, 0, 2);
  EXPECT_EQ(c.branch, Case2Branch::excluded);
  EXPECT_NE(c.citation.find("(D-E)^2 = -3 + 4 - 1 = 0"), std::string::npos);
  EXPECT_EQ(c.value, Rational(-1, 2));
}

TEST(Case2Values, Errors) {
  try {
    case2_values(1, -2, 0, 1);
    FAIL();
  } catch (const DomainError& err) {
    EXPECT_EQ(err.code(), "adjunction");
  }
  EXPECT_THROW(case2_values(0, -2, 0, 1), DomainError);  // M'.D = -2
  EXPECT_THROW(case2_values(1, 0, 1, 1), DomainError);   // D^2 = 0
  EXPECT_THROW(case2_values(1, -3, 0, 0), DomainError);  // d = 0
}

// Both printed forms of M'.D agree on the whole grid.
TEST(Case2Values, PrintedFormsAgree) {
  std::size_t evaluated = 0;
  for (Int e = -10; e <= -1; ++e)
    for (Int d = 1; d <= 10; ++d)
      for (Int pa = 0; pa <= 6; ++pa) {
        const Int b = 2 * pa - 2 - e;
        if (b < 0) continue;
        const Rational first = Rational(b) + Rational(e, d);
        const Rational second = Rational(2 * pa - 2) - (Rational(1) - Rational(1, d)) * e;
        ASSERT_EQ(first, second);
        try {
          const auto v = case2_values(b, e, pa, d);
          ASSERT_EQ(v.value, first);
          ASSERT_EQ(v.branch == Case2Branch::me_contraction, pa == 1 && d == 1);
          ++evaluated;
        } catch (const DomainError& err) {
          ASSERT_EQ(err.code(), "case2-hypothesis");
          ASSERT_LT(first, 0);
        }
      }
  EXPECT_GT(evaluated, 300u);
}

TEST(BuildNef, CaseOneModel) {
  const SurfaceModel m = case_one_model();
  const Lattice& L = m.lattice();
  const auto r = build_nef_orthogonal(m);
  EXPECT_EQ(r.case_number, 1);
  EXPECT_EQ(r.m, QDivisor(m.canonical() + m.exceptional(), 1));
  EXPECT_EQ(r.m.square(L), 2);
  EXPECT_EQ(r.m.square(L), square(L, m.canonical()) + 1);
  EXPECT_EQ(r.m.dot(L, m.exceptional()), 0);
  EXPECT_EQ(r.m.dot(L, m.curves()[0].cls), 1);
  EXPECT_TRUE(r.report.ample());
  EXPECT_FALSE(r.certificate.has_value());
}

TEST(BuildNef, NoCurves) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const SurfaceModel m = SurfaceModel::create(diagonal_gram(n), kappa(n), e(n, n), {});
    const auto r = build_nef_orthogonal(m);
    EXPECT_EQ(r.case_number, 1);
    EXPECT_EQ(r.m, QDivisor(kappa(n) + e(n, n), 1));
    EXPECT_EQ(r.m.square(m.lattice()), 10 - static_cast<Int>(n));
  }
}

TEST(BuildNef, RequiresDominance) {
  try {
    build_nef_orthogonal(reflection_model());
    FAIL();
  } catch (const DomainError& err) {
    EXPECT_EQ(err.code(), "not-dominant");
  }
  const SurfaceModel m = reflection_model();
  const auto r = build_nef_orthogonal(m.with_exceptional(reflect_to_dominant(m).e));
  EXPECT_EQ(r.case_number, 1);
}

// A (-2)-curve orthogonal to K + E contracts to an A_1 point.
TEST(BuildNef, ContractsOneMinusTwoCurve) {
  const LatticeVector d{1, -1, -1, 0, 0, 0, 0, 0, -1};
  const LatticeVector a1{0, 0, 0, 0, 0, 0, 1, -1, 0};
  const SurfaceModel m = SurfaceModel::create(diagonal_gram(8), kappa(8), e(8, 8), {{d, 0}, {a1, 0}});
  const auto r = build_nef_orthogonal(m);
  EXPECT_EQ(r.case_number, 1);
  ASSERT_EQ(r.report.contracted, (std::vector<std::size_t>{1}));
  ASSERT_EQ(r.report.components.size(), 1u);
  EXPECT_TRUE(r.report.components[0].rational);
  EXPECT_EQ(r.report.components[0].multiplicity.value, 2);
  EXPECT_FALSE(r.report.ample());
}

// E is numerically D1 + D2 with D1^2 = -3, D2^2 = -2, D1.D2 = 2: a cycle of
// two rational curves, contracted to a cusp. Certificate D = D1 + D2, e = 1.
TEST(BuildNef, CaseOneCertificate) {
  const LatticeVector d1{0, 1, -1, 0, 0, 0, 0, 0, 1};
  const LatticeVector d2{0, -1, 1, 0, 0, 0, 0, 0, 0};
  const SurfaceModel m = SurfaceModel::create(diagonal_gram(8), kappa(8), e(8, 8), {{d1, 0}, {d2, 0}});
  ASSERT_EQ(d1 + d2, m.exceptional());
  const auto r = build_nef_orthogonal(m);
  EXPECT_EQ(r.case_number, 1);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(*r.certificate, Cycle({1, 1}));
  EXPECT_EQ(r.certificate_curves, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.m, QDivisor(m.canonical() + m.exceptional(), 1));
  ASSERT_EQ(r.report.components.size(), 1u);
  EXPECT_FALSE(r.report.components[0].rational);
  EXPECT_EQ(r.report.components[0].me_kind, MEKind::cusp);
}

// An elliptic curve in the class of E: simple elliptic contraction.
TEST(BuildNef, EllipticCurveInTheClassOfE) {
  const SurfaceModel m = SurfaceModel::create(diagonal_gram(4), kappa(4), e(4, 4), {{e(4, 4), 1}});
  const auto r = build_nef_orthogonal(m);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(r.report.components.at(0).me_kind, MEKind::simple_elliptic);
}

TEST(ClassifyContraction, Errors) {
  const SurfaceModel m = case_one_model();
  const Lattice& L = m.lattice();
  try {
    classify_contraction(m, QDivisor(e(8, 1), 1));
    FAIL();
  } catch (const DomainError& err) {
    EXPECT_EQ(err.code(), "not-big");
  }
  try {
    classify_contraction(m, QDivisor(LatticeVector{3, -2, -2, 0, 0, 0, 0, 0, 0}, 1));
    FAIL();
  } catch (const DomainError& err) {
    EXPECT_EQ(err.code(), "not-nef");
  }
  // A smooth rational (-1)-curve has K.C = -1, so a model carrying one never
  // gets as far as the contraction.
  const LatticeVector ex{0, 0, 0, 0, 0, 0, 0, 1, 0};
  ASSERT_EQ(square(L, ex), -1);
  ASSERT_EQ(inner_product(L, m.canonical(), ex), 1);
  try {
    SurfaceModel::create(diagonal_gram(8), kappa(8), e(8, 8), {{-ex, 0}});
    FAIL();
  } catch (const DomainError& err) {
    EXPECT_EQ(err.code(), "k-not-nef");
  }
}

// Hodge index on x = D - (K.D) E rules out Case II on dominant models and
// forces every nonrational Case I certificate to be numerically E, so e = 1.
// Random small models confirm it.
TEST(BuildNef, RandomModelsStayInCaseOne) {
  std::mt19937_64 rng(79);
  std::size_t built = 0, typed = 0, certified = 0;
  for (int t = 0; t < 3000; ++t) {
    const std::size_t n = 2 + rng() % 7;
    const Lattice L = Lattice::diagonal(n);
    std::uniform_int_distribution<Int> lead(0, 2), coord(-1, 1);
    std::vector<Curve> curves;
    for (int attempt = 0; attempt < 12 && curves.size() < 4; ++attempt) {
      std::vector<Int> c(n + 1);
      c[0] = lead(rng);
      for (std::size_t i = 1; i <= n; ++i) c[i] = coord(rng);
      const LatticeVector v(c);
      if (v.is_zero()) continue;
      const Int kc = inner_product(L, kappa(n), v), s = square(L, v);
      if (kc < 0 || s >= 0 || kc + s < -2) continue;
      bool ok = true;
      for (const auto& other : curves) ok = ok && inner_product(L, v, other.cls) >= 0;
      if (ok) curves.push_back({v, 1 + (kc + s) / 2});
    }
    try {
      SurfaceModel m = SurfaceModel::create(diagonal_gram(n), kappa(n), e(n, n), curves);
      m = m.with_exceptional(reflect_to_dominant(m).e);
      const auto r = build_nef_orthogonal(m);
      ASSERT_EQ(r.case_number, 1);
      ASSERT_EQ(r.m, QDivisor(m.canonical() + m.exceptional(), 1));
      ASSERT_EQ(r.m.dot(L, m.exceptional()), 0);
      ASSERT_GT(r.m.square(L), 0);
      for (const auto& c : m.curves()) ASSERT_GE(r.m.dot(L, c.cls), 0);
      ++built;
      certified += r.certificate.has_value();
    } catch (const DomainError& err) {
      ASSERT_EQ(err.code(), "delta-not-definite") << err.what();
      ++typed;
    }
  }
  EXPECT_GT(built, 1000u);
  EXPECT_GT(certified, 0u);
  EXPECT_GT(typed, 0u);
}

}  // namespace
}  // namespace hyperlat
