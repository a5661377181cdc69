#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "hyperlat/lattice.hpp"

namespace hyperlat {

// Singularity of a genus-1 type component. Only affects the label of a
// minimally elliptic singularity, never the decision.
enum class Singularity { unspecified, smooth, node, cusp };

struct Vertex {
  Int self_int = -2;
  Int genus = 0;
  Singularity sing = Singularity::unspecified;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;
  Int m = 1;
};

// Effective cycle sum mult_i D_i.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::vector<Int> mult) : mult_(std::move(mult)) {}
  static Cycle zero(std::size_t n) { return Cycle(std::vector<Int>(n, 0)); }
  static Cycle unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return mult_.size(); }
  Int operator[](std::size_t i) const { return mult_[i]; }
  Int& operator[](std::size_t i) { return mult_[i]; }
  const std::vector<Int>& values() const noexcept { return mult_; }

  bool is_zero() const;
  bool is_reduced() const;  // every multiplicity in {0,1}
  Int total() const;
  std::vector<std::size_t> support() const;
  // Componentwise <=.
  bool dominated_by(const Cycle& other) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  std::string str() const;

 private:
  std::vector<Int> mult_;
};

// Validated dual graph: connected with negative definite intersection matrix.
class DualGraph {
 public:
  // `intersections` is the full symmetric matrix; its diagonal must agree with
  // the vertex self-intersections.
  static DualGraph create(std::vector<Vertex> vertices, const IntMatrix& intersections, bool concurrent = false);
  static DualGraph from_edges(std::vector<Vertex> vertices, const std::vector<Edge>& edges,
                              bool concurrent = false);

  // Same intersection matrix, different genera/annotations. Skips the
  // definiteness check.
  DualGraph with_vertices(std::vector<Vertex> vertices) const;
  // Induced subgraph on the given vertices (validated again).
  DualGraph induced(const std::vector<std::size_t>& subset) const;

  std::size_t size() const noexcept { return vertices_.size(); }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  Int intersection(std::size_t i, std::size_t j) const { return matrix_(i, j); }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  // Tacnode / common-point configuration instead of a cycle of curves.
  bool concurrent() const noexcept { return concurrent_; }

  // K.D_i = 2 g_i - 2 - D_i^2.
  Int canonical_degree(std::size_t i) const;
  // Contains a smooth rational (-1)-curve.
  bool has_exceptional_curve() const;

 private:
  DualGraph() = default;
  std::vector<Vertex> vertices_;
  IntMatrix matrix_;
  bool concurrent_ = false;
};

// Vertex index sets of the connected components of the graph with adjacency
// m(i,j) != 0, i != j. Components and their members are sorted.
std::vector<std::vector<std::size_t>> connected_components(const IntMatrix& m);

Int intersect(const DualGraph& g, const Cycle& z, std::size_t i);
Int intersect(const DualGraph& g, const Cycle& a, const Cycle& b);
Int canonical_degree(const DualGraph& g, const Cycle& z);

// 1 + (K.Z + Z^2)/2. Throws DomainError("zero-cycle") for Z = 0.
Int arithmetic_genus(const DualGraph& g, const Cycle& z);

struct FundamentalCycle {
  Cycle z0;
  std::vector<std::size_t> sequence;  // A_1, ..., A_k as vertex indices
};

// Computation sequence from vertex 0, always adding the smallest D_i with
// Z.D_i > 0.
FundamentalCycle fundamental_cycle(const DualGraph& g);
// Random start and random choice among the admissible D_i.
FundamentalCycle fundamental_cycle(const DualGraph& g, std::mt19937_64& rng);

bool is_rational(const DualGraph& g);

enum class MEKind { simple_elliptic, cusp, triangle, non_reduced };

std::string to_string(MEKind kind);

// Minimally elliptic test by the subcycle definition: p_a(Z0) = 1 and
// p_a(Z') <= 0 for all 0 < Z' < Z0. Empty optional when not ME. Requires a
// minimal graph.
std::optional<MEKind> classify_minimally_elliptic(const DualGraph& g);

struct Multiplicity {
  Int value = 0;
  bool smooth_point = false;  // -Z0^2 = 1
};

// -Z0^2 for a rational graph; DomainError("not-rational") otherwise.
Multiplicity multiplicity(const DualGraph& g);

// B_0, ..., B_k with C_i = B_0 + ... + B_i, C_k = Z0 and
// B_i.C_i <= B_i^2 + 1. Requires a rational graph.
std::vector<std::size_t> peel_sequence(const DualGraph& g);

struct NonrationalityCertificate {
  bool rational = true;
  Cycle d;                            // minimal cycle with p_a(D) >= 1
  std::vector<std::size_t> e_set;     // j in Supp(D) with (K+D).D_j = 0
  std::optional<MEKind> me_kind;      // set when e_set is nonempty
};

// For a nonrational minimal graph: the first cycle D <= Z0 in (total, lex)
// order with p_a(D) >= 1. Then (K+D).D_j >= 0 for every j, and either the
// inequality is strict on Supp(D) or Supp(D) contracts to a minimally
// elliptic singularity with fundamental cycle D.
NonrationalityCertificate nonrationality_certificate(const DualGraph& g);

}  // namespace hyperlat
