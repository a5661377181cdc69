#pragma once

// Brute-force cross-checks. Everything here works from raw intersection data
// and never calls the algorithms it is used to check.

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "hyperlat/lattice.hpp"
#include "hyperlat/resolution_graph.hpp"

namespace hyperlat::oracle {

// All alpha in Lambda_n with q(alpha) = -1, alpha.kappa_n = 1 and every
// |alpha_i| <= bound, sorted lexicographically.
std::vector<LatticeVector> brute_force_walls(std::size_t n, Int bound);

// Visits every characteristic vector of Lambda_n with q = target and all
// |coordinates| <= height.
void for_each_characteristic(std::size_t n, Int target, Int height,
                             const std::function<void(const LatticeVector&)>& visit);

// Connected negative definite intersection matrices with at most
// max_vertices vertices, diagonal in [lo, hi] and off-diagonal entries in
// [0, max_edge], one per isomorphism class. Deterministic order.
std::vector<IntMatrix> graph_corpus(std::size_t max_vertices, Int lo, Int hi, Int max_edge);

// Componentwise minimum of {0 < Z <= bound : Z.D_i <= 0 for all i}; the
// zero cycle when that set is empty.
Cycle minimal_anti_nef_cycle(const IntMatrix& m, Int bound);
// Same search over the box 0 <= z_i <= bound_i.
Cycle minimal_anti_nef_cycle(const IntMatrix& m, const Cycle& bound);

// p_a(Z) <= 0 for every 0 < Z <= bound.
bool all_subcycles_nonpositive(const DualGraph& g, const Cycle& bound);

// Partial sums C_i of seq satisfy B_i.C_i <= B_i^2 + 1 and end at z0.
bool peel_sequence_valid(const DualGraph& g, const std::vector<std::size_t>& seq, const Cycle& z0);

// p_a(Z0) = 1 and (K+Z0).D_i = 0 for every vertex.
bool numerically_minimally_elliptic(const DualGraph& g, const Cycle& z0);

// All genus assignments with entries in {0, 1}, in binary counting order.
std::vector<std::vector<Int>> genus_assignments(std::size_t n);

// A random word of negations, sign flips, transpositions and reflections in
// e_0 - e_i - e_j and e_0 - e_i - e_j - e_k, of length at most max_length.
std::vector<Generator> random_word(std::size_t n, std::size_t max_length, std::mt19937_64& rng);

}  // namespace hyperlat::oracle
