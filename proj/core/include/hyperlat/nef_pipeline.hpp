#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperlat/lattice.hpp"
#include "hyperlat/resolution_graph.hpp"

namespace hyperlat {

struct Curve {
  LatticeVector cls;
  Int pa = 0;
};

// Numerical model of a minimal surface of general type with a class E,
// E^2 = -1, K.E = 1. "Nef" always means nef against the listed curves.
class SurfaceModel {
 public:
  // Throws DomainError naming the violated hypothesis: "signature",
  // "not-characteristic", "not-general-type", "k-not-nef", "bad-exceptional-class",
  // "adjunction", "curve-intersection".
  static SurfaceModel create(IntMatrix gram, LatticeVector k, LatticeVector e, std::vector<Curve> curves);

  const Lattice& lattice() const noexcept { return lattice_; }
  const LatticeVector& canonical() const noexcept { return k_; }
  const LatticeVector& exceptional() const noexcept { return e_; }
  const std::vector<Curve>& curves() const noexcept { return curves_; }

  // Indices of the smooth rational (-2)-curves.
  std::vector<std::size_t> delta() const;

  SurfaceModel with_exceptional(LatticeVector e) const;

 private:
  explicit SurfaceModel(Lattice lattice) : lattice_(std::move(lattice)) {}
  Lattice lattice_;
  LatticeVector k_;
  LatticeVector e_;
  std::vector<Curve> curves_;
};

// numerator / denominator, gcd-reduced, denominator >= 1.
class QDivisor {
 public:
  QDivisor(LatticeVector numerator, Int denominator);

  const LatticeVector& numerator() const noexcept { return num_; }
  Int denominator() const noexcept { return den_; }

  Rational dot(const Lattice& lattice, const LatticeVector& x) const;
  Rational square(const Lattice& lattice) const;

  friend bool operator==(const QDivisor&, const QDivisor&) = default;

 private:
  LatticeVector num_;
  Int den_;
};

// x.y >= 0 for x, y nonzero in the closed positive cone.
bool same_cone_component(const Lattice& lattice, const LatticeVector& x, const LatticeVector& y);

struct DominantReflection {
  Isometry gamma;
  LatticeVector e;  // gamma(E), E.C >= 0 for every (-2)-curve C
  std::size_t steps = 0;
};

// Reflects E in the (-2)-curves until it pairs nonnegatively with all of
// them. The (-2)-curves must span a negative definite sublattice.
DominantReflection reflect_to_dominant(const SurfaceModel& model);

enum class Case2Branch { me_contraction, rational_only, excluded };

std::string to_string(Case2Branch branch);

struct Case2Values {
  Rational lambda;  // 1/d
  Rational value;   // M'.D
  Case2Branch branch;
  std::string citation;
};

// M' = K + D/d with b = K.D, e = D^2, d = -E.D. Excluded for
// (p_a, e, d) = (0, -3, 2); throws DomainError("case2-hypothesis") for any
// other negative M'.D.
Case2Values case2_values(Int b, Int e, Int pa, Int d);

struct ContractedComponent {
  std::vector<std::size_t> curves;  // indices into the model's curve list
  bool rational = false;
  Multiplicity multiplicity;        // for rational components
  std::optional<MEKind> me_kind;    // for minimally elliptic ones
};

struct ContractionReport {
  std::vector<std::size_t> contracted;  // curves with M.C = 0
  std::vector<ContractedComponent> components;
  bool ample() const noexcept { return contracted.empty(); }
};

// Requires M nef on the listed curves and M^2 > 0.
ContractionReport classify_contraction(const SurfaceModel& model, const QDivisor& m);

struct NefResult {
  int case_number = 1;                        // 1 or 2
  QDivisor m{LatticeVector{}, 1};
  std::optional<Cycle> certificate;           // Case I, nonrational branch
  std::vector<std::size_t> certificate_curves;
  std::optional<std::size_t> violating_curve;  // Case II
  std::optional<Case2Values> case2;
  ContractionReport report;
};

// Nef and big M with M.E = 0. Requires E.C >= 0 for every (-2)-curve.
NefResult build_nef_orthogonal(const SurfaceModel& model);

}  // namespace hyperlat
