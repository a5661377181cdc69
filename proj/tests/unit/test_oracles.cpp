#include <map>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace hyperlat {
namespace {

std::map<std::size_t, std::size_t> by_size(const std::vector<IntMatrix>& corpus) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& m : corpus) ++out[m.rows()];
  return out;
}

// Isomorphism classes of connected negative definite graphs, diagonal in
// [-5,-2], edge multiplicities <= 2. Frozen from the generator.
TEST(GraphCorpus, FrozenCountsUpToFour) {
  const auto corpus = oracle::graph_corpus(4, -5, -2, 2);
  EXPECT_EQ(by_size(corpus), (std::map<std::size_t, std::size_t>{{1, 4}, {2, 19}, {3, 199}, {4, 3266}}));
}

// Two vertices by hand: d1 d2 - m^2 > 0 with d1 <= d2 up to swapping.
TEST(GraphCorpus, TwoVerticesByHand) {
  std::size_t count = 0;
  for (Int a = 2; a <= 5; ++a)
    for (Int b = a; b <= 5; ++b)
      for (Int m = 1; m <= 2; ++m) count += a * b - m * m > 0;
  EXPECT_EQ(count, 19u);
}

TEST(GraphCorpus, MembersAreValid) {
  for (const auto& m : oracle::graph_corpus(3, -5, -2, 2)) {
    ASSERT_TRUE(m.is_symmetric());
    ASSERT_EQ(signature(m), (Signature{0, m.rows(), 0}));
    ASSERT_EQ(connected_components(m).size(), 1u);
  }
}

TEST(BruteForceWalls, SmallRanks) {
  EXPECT_EQ(oracle::brute_force_walls(0, 6).size(), 0u);
  EXPECT_EQ(oracle::brute_force_walls(1, 6), (std::vector<LatticeVector>{{0, 1}}));
  EXPECT_EQ(oracle::brute_force_walls(2, 6).size(), 3u);  // e1, e2, e0 - e1 - e2
  EXPECT_EQ(oracle::brute_force_walls(8, 6).size(), 240u);
}

TEST(CharacteristicEnumeration, CountsForOnePoint) {
  // q = 8 in Lambda_1: a^2 - b^2 = 8 with a, b odd: (3, 1) up to signs.
  std::size_t count = 0;
  oracle::for_each_characteristic(1, 8, 9, [&](const LatticeVector& k) {
    EXPECT_EQ(k[0] * k[0] - k[1] * k[1], 8);
    ++count;
  });
  EXPECT_EQ(count, 4u);
}

TEST(MinimalAntiNefCycle, Examples) {
  EXPECT_EQ(oracle::minimal_anti_nef_cycle(IntMatrix::from_rows({{-2}}), 6), Cycle({1}));
  EXPECT_EQ(oracle::minimal_anti_nef_cycle(IntMatrix::from_rows({{-2, 1}, {1, -2}}), 6), Cycle({1, 1}));
  // D_4 needs multiplicity 2 at the centre.
  const IntMatrix d4 = IntMatrix::from_rows({{-2, 1, 1, 1}, {1, -2, 0, 0}, {1, 0, -2, 0}, {1, 0, 0, -2}});
  EXPECT_EQ(oracle::minimal_anti_nef_cycle(d4, 6), Cycle({2, 1, 1, 1}));
  EXPECT_EQ(oracle::minimal_anti_nef_cycle(d4, 1), Cycle::zero(4));
}

TEST(GenusAssignments, BinaryOrder) {
  const auto a = oracle::genus_assignments(2);
  EXPECT_EQ(a, (std::vector<std::vector<Int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(oracle::genus_assignments(5).size(), 32u);
}

TEST(RandomWord, ProducesIsometries) {
  std::mt19937_64 rng(83);
  for (std::size_t n = 1; n <= 9; ++n) {
    const Lattice L = Lattice::diagonal(n);
    for (int t = 0; t < 20; ++t) {
      const auto w = oracle::random_word(n, 12, rng);
      ASSERT_LE(w.size(), 12u);
      ASSERT_TRUE(verify_isometry(Isometry(evaluate_word(L, w), w), L));
    }
  }
}

TEST(NumericalMinimallyElliptic, Examples) {
  const DualGraph triangle =
      DualGraph::from_edges({{-2, 0}, {-2, 0}, {-3, 0}}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  EXPECT_TRUE(oracle::numerically_minimally_elliptic(triangle, Cycle({1, 1, 1})));
  const DualGraph a2 = DualGraph::from_edges({{-2, 0}, {-2, 0}}, {{0, 1, 1}});
  EXPECT_FALSE(oracle::numerically_minimally_elliptic(a2, Cycle({1, 1})));
}

}  // namespace
}  // namespace hyperlat
