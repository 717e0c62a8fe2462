#include <gtest/gtest.h>

#include "cleansr/clean_graph.hpp"
#include "cleansr/ring_build.hpp"
#include "cleansr/solvers.hpp"
#include "test_support.hpp"

using namespace cleansr;
using namespace cleansr::testing;

TEST(Solvers, IndependenceAndCoverMatchBruteForce) {
  for (std::uint32_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 1 + seed % 16;
    auto g = random_graph(n, 0.1 + 0.008 * seed, seed);
    auto mis = max_independent_set(g);
    auto vc = min_vertex_cover(g);
    EXPECT_EQ(mis.size, brute_force_independence(g)) << seed;
    EXPECT_EQ(vc.size, brute_force_vertex_cover(g)) << seed;
    EXPECT_EQ(mis.size + vc.size, n) << seed;
    EXPECT_EQ(mis.witness.size(), mis.size);
    EXPECT_TRUE(is_independent_set(g, mis.witness)) << seed;
    EXPECT_TRUE(is_vertex_cover(g, vc.witness)) << seed;
  }
}

TEST(Solvers, LargerSparseGraphsStayConsistent) {
  for (std::uint32_t seed = 1; seed <= 20; ++seed) {
    auto g = random_graph(60, 0.08, seed);
    auto mis = max_independent_set(g);
    auto vc = min_vertex_cover(g);
    EXPECT_EQ(mis.size + vc.size, 60u);
    EXPECT_TRUE(is_independent_set(g, mis.witness));
    EXPECT_TRUE(is_vertex_cover(g, vc.witness));
  }
}

TEST(Solvers, BruteForceSdimMatchesSubsetEnumeration) {
  for (std::uint32_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 2 + seed % 11;
    auto g = random_connected_graph(n, 0.25, seed);
    auto oracle = sdim_bruteforce(g);
    EXPECT_EQ(oracle.size, brute_force_sdim(g)) << seed;
    EXPECT_TRUE(is_strong_resolving_set(all_pairs_distances(g), oracle.witness)) << seed;
    EXPECT_EQ(sdim_via_srg(g).sdim, oracle.size) << seed;
  }
}

TEST(Solvers, KnownDimensions) {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = i;
    auto k = complete_graph(labels);
    EXPECT_EQ(sdim_via_srg(k).sdim, n - 1);
    EXPECT_EQ(sdim_bruteforce(k).size, n - 1);
  }
  auto path = make_plain_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_EQ(sdim_bruteforce(path).size, 1u);
  EXPECT_EQ(sdim_via_srg(path).sdim, 1u);
}

TEST(Solvers, CleanGraphDimensions) {
  struct Case {
    const char* ring;
    std::size_t sdim;
  };
  const Case cases[] = {{"Z2 x Z3", 4}, {"Z3", 2}, {"GF(7)", 10}, {"Z2 x Z2", 3}, {"Z5", 6}, {"Z8", 6}};
  for (const auto& c : cases) {
    auto g = build_cl(build_ring(c.ring));
    auto rep = sdim_report(g, 18);
    EXPECT_EQ(rep.sdim, c.sdim) << c.ring;
    ASSERT_TRUE(rep.oracle_ran) << c.ring;
    EXPECT_EQ(rep.oracle_sdim, c.sdim) << c.ring;
    EXPECT_EQ(rep.alpha_srg + rep.beta_srg, rep.srg_vertices) << c.ring;
    EXPECT_TRUE(is_strong_resolving_set(all_pairs_distances(g), rep.vertex_cover)) << c.ring;
  }
}

TEST(Solvers, OracleRefusesLargeOrDisconnectedGraphs) {
  auto big = build_cl(build_ring("Z2 x Z7"));
  ASSERT_GT(big.size(), 18u);
  EXPECT_THROW(sdim_bruteforce(big), TooLarge);
  auto rep = sdim_report(big, 18);
  EXPECT_FALSE(rep.oracle_ran);
  EXPECT_EQ(rep.sdim, 19u);
  EXPECT_THROW(sdim_bruteforce(make_plain_graph(3, {{0, 1}})), Disconnected);
  EXPECT_THROW(sdim_via_srg(make_plain_graph(3, {{0, 1}})), Disconnected);
}

TEST(Solvers, Deterministic) {
  auto g = random_connected_graph(14, 0.3, 99);
  auto a = sdim_bruteforce(g);
  auto b = sdim_bruteforce(g);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(max_independent_set(g).witness, max_independent_set(g).witness);
}
