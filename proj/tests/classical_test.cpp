#include "cqaoa/classical.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cqaoa/graph.hpp"
#include "oracles.hpp"

using namespace cqaoa;

TEST(Gavril, StarAlwaysPicksTwoVertices) {
  for (int n = 2; n <= 10; ++n) {
    const Graph g = gen_star(n);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const CoverResult r = gavril_2approx(g, seed);
      EXPECT_EQ(r.size, 2u);
      EXPECT_TRUE(r.is_valid);
    }
  }
}

TEST(Gavril, EmptyGraphEmptyCover) {
  const CoverResult r = gavril_2approx(gen_erdos_renyi(5, 0.0, 1), 3);
  EXPECT_EQ(r.size, 0u);
  EXPECT_TRUE(r.is_valid);
}

TEST(Gavril, ValidEvenAndWithinFactorTwo) {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracles::random_graph(3 + trial % 10, rng);
    const std::size_t opt = oracles::exhaustive_min_cover_size(g);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const CoverResult r = gavril_2approx(g, rng());
      EXPECT_TRUE(r.is_valid);
      EXPECT_EQ(r.size % 2, 0u);
      EXPECT_LE(r.size, 2 * opt);
      (void)seed;
    }
  }
}

TEST(Gavril, DeterministicPerSeed) {
  const Graph g = gen_erdos_renyi(10, 0.5, 9);
  const CoverResult a = gavril_2approx(g, 1234);
  const CoverResult b = gavril_2approx(g, 1234);
  EXPECT_EQ(a.cover, b.cover);
}

TEST(Gavril, LargeCycleMeanQuality) {
  // the mean quality on big cycles settles near 0.58
  const Graph g = gen_cycle(128);
  const std::size_t opt = 64;
  double sum = 0.0;
  const int seeds = 300;
  for (int s = 0; s < seeds; ++s)
    sum += approximation_quality(opt, gavril_2approx(g, s).size);
  EXPECT_NEAR(sum / seeds, 0.58, 0.08);
}

TEST(ExactCover, CycleFormula) {
  for (int n = 3; n <= 10; ++n)
    EXPECT_EQ(exact_min_vertex_cover(gen_cycle(n)).size,
              static_cast<std::size_t>((n + 1) / 2));
}

TEST(ExactCover, StarIsCentre) {
  for (int n = 2; n <= 12; ++n) {
    const CoverResult r = exact_min_vertex_cover(gen_star(n));
    EXPECT_EQ(r.size, 1u);
    EXPECT_EQ(r.cover, std::vector<int>{0});
  }
}

TEST(ExactCover, TriangleNeedsTwo) {
  EXPECT_EQ(exact_min_vertex_cover(gen_cycle(3)).size, 2u);
}

TEST(ExactCover, EdgelessIsEmpty) {
  const CoverResult r = exact_min_vertex_cover(gen_erdos_renyi(6, 0.0, 1));
  EXPECT_EQ(r.size, 0u);
  EXPECT_TRUE(r.is_valid);
}

TEST(ExactCover, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(60);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracles::random_graph(2 + trial % 11, rng);
    const CoverResult r = exact_min_vertex_cover(g);
    EXPECT_TRUE(r.is_valid) << write_edge_list(g);
    EXPECT_EQ(r.size, oracles::exhaustive_min_cover_size(g))
        << write_edge_list(g);
  }
}

TEST(ExactCover, CapacityError) {
  EXPECT_THROW(exact_min_vertex_cover(gen_star(25)), capacity_error);
  EXPECT_NO_THROW(exact_min_vertex_cover(gen_star(25), 25));
}

TEST(Quality, KnownRatios) {
  EXPECT_DOUBLE_EQ(approximation_quality(1, 2), 0.5);
  EXPECT_DOUBLE_EQ(approximation_quality(4, 4), 1.0);
  EXPECT_DOUBLE_EQ(approximation_quality(3, 5), 0.6);
  EXPECT_DOUBLE_EQ(approximation_quality(0, 0), 1.0);
}

TEST(Quality, RejectsBrokenSolver) {
  EXPECT_THROW(approximation_quality(3, 2), std::invalid_argument);
}
