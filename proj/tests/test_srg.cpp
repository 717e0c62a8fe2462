#include <gtest/gtest.h>

#include "cleansr/catalog.hpp"
#include "cleansr/ring_build.hpp"
#include "cleansr/srg.hpp"
#include "test_support.hpp"

using namespace cleansr;
using cleansr::testing::element;

namespace {

CleanVertex vertex(const FiniteRing& r, const std::string& e, const std::string& u) {
  return {element(r, e), element(r, u)};
}

}  // namespace

TEST(Srg, CompleteGraphIsItsOwnSrg) {
  auto k5 = complete_graph(std::vector<int>{0, 1, 2, 3, 4});
  auto res = strong_resolving_graph(k5);
  EXPECT_EQ(res.mmd_pairs.size(), 10u);
  EXPECT_TRUE(same_labeled_graph(res.srg, k5));
}

TEST(Srg, PathHasOnlyEndpoints) {
  auto p = make_plain_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  auto res = strong_resolving_graph(p);
  EXPECT_EQ(res.mmd_pairs, (std::vector<Edge>{{0, 4}}));
  EXPECT_EQ(res.boundary, (std::vector<std::size_t>{0, 4}));
  EXPECT_EQ(res.srg.edge_count(), 1u);
}

TEST(Srg, EvenCycleAntipodalPairs) {
  auto c = make_plain_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  auto res = strong_resolving_graph(c);
  EXPECT_EQ(res.mmd_pairs, (std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}}));
}

TEST(Srg, DisconnectedThrows) {
  EXPECT_THROW(strong_resolving_graph(make_plain_graph(3, {{0, 1}})), Disconnected);
  auto r = build_ring("Z3");
  EXPECT_THROW(strong_resolving_graph(build_cl2(r)), Disconnected);
}

TEST(Srg, FieldOfOrderFiveGivesTwoCliques) {
  auto r = build_ring("Z5");
  auto srg = strong_resolving_graph(build_cl(r)).srg;
  EXPECT_EQ(srg.size(), 8u);
  EXPECT_TRUE(is_disjoint_union_of_cliques(srg, {4, 4}));
}

TEST(Srg, MmdPairsOfZ2xZ3MatchPredicate) {
  auto r = build_ring("Z2 x Z3");
  auto g = build_cl(r);
  auto computed = strong_resolving_graph(g).mmd_pairs;
  EXPECT_EQ(computed, predicted_mmd_pairs(r, g, predicted_mmd_cl_with_idempotents));
  auto g2 = build_cl2(r);
  EXPECT_EQ(strong_resolving_graph(g2).mmd_pairs, predicted_mmd_pairs(r, g2, predicted_mmd_cl2));
}

TEST(Srg, GraphKOfZ2xZ3) {
  auto r = build_ring("Z2 x Z3");
  auto k = build_graph_K(r);
  EXPECT_EQ(k.size(), 4u);
  EXPECT_EQ(k.edge_count(), 2u);
  EXPECT_TRUE(is_disjoint_union_of_cliques(k, {2, 2}));
}

TEST(Srg, MixedIdentityPairNeedsSameNoninvolutoryUnit) {
  auto r = build_ring("Z2 x GF(4)");
  auto cls = classify_units(r);
  ASSERT_EQ(cls.noninvolutory.size(), 2u);
  const auto u = cls.noninvolutory[0];
  const auto w = cls.noninvolutory[1];
  auto e = element(r, "(0,1)");
  EXPECT_TRUE(predicted_mmd_cl2(r, {r.one(), u}, {e, u}));
  EXPECT_FALSE(predicted_mmd_cl2(r, {r.one(), u}, {e, w}));
  EXPECT_FALSE(predicted_mmd_cl2(r, {r.one(), r.one()}, {e, r.one()}));
  auto d = all_pairs_distances(build_cl2(r));
  auto g2 = build_cl2(r);
  std::size_t iu = 0, iv = 0;
  for (std::size_t i = 0; i < g2.size(); ++i) {
    if (g2.label(i) == CleanVertex{r.one(), u}) iu = i;
    if (g2.label(i) == CleanVertex{e, u}) iv = i;
  }
  EXPECT_TRUE(maximally_distant(g2, d, iu, iv) && maximally_distant(g2, d, iv, iu));
}

TEST(Srg, PredicatesRejectUnmetHypotheses) {
  auto z5 = build_ring("Z5");
  auto z6 = build_ring("Z6");
  auto z2 = build_ring("Z2");
  EXPECT_THROW(predicted_mmd_cl2(z5, {z5.one(), z5.one()}, {z5.one(), z5.one()}), HypothesisViolated);
  EXPECT_THROW(predicted_mmd_cl_with_idempotents(z5, {z5.one(), z5.one()}, {z5.one(), z5.one()}),
               HypothesisViolated);
  EXPECT_THROW(predicted_mmd_cl_no_idempotents(z6, {z6.one(), z6.one()}, {z6.one(), z6.one()}),
               HypothesisViolated);
  EXPECT_THROW(predicted_mmd_cl_no_idempotents(z2, {z2.one(), z2.one()}, {z2.zero(), z2.one()}),
               HypothesisViolated);
  EXPECT_THROW(predicted_mmd_cl2(z6, vertex(z6, "0", "1"), vertex(z6, "1", "1")), HypothesisViolated);
  EXPECT_THROW(build_graph_K(z5), HypothesisViolated);
}

TEST(Srg, StructureClaimsHoldAcrossCatalog) {
  for (const auto& [name, spec] : catalog()) {
    auto r = build_ring(spec);
    for (const auto& c : verify_srg_structure(r))
      EXPECT_NE(c.status, ClaimStatus::Mismatch) << name << " " << c.id << " " << c.witness;
  }
}

TEST(Srg, MmdPredicatesAgreeAcrossCatalog) {
  for (const auto& [name, spec] : catalog()) {
    auto r = build_ring(spec);
    if (r.units().size() < 2) continue;
    auto g = build_cl(r);
    auto computed = strong_resolving_graph(g).mmd_pairs;
    if (r.idempotents().size() > 2) {
      EXPECT_EQ(computed, predicted_mmd_pairs(r, g, predicted_mmd_cl_with_idempotents)) << name;
      auto g2 = build_cl2(r);
      EXPECT_EQ(strong_resolving_graph(g2).mmd_pairs, predicted_mmd_pairs(r, g2, predicted_mmd_cl2))
          << name;
    } else {
      EXPECT_EQ(computed, predicted_mmd_pairs(r, g, predicted_mmd_cl_no_idempotents)) << name;
    }
  }
}
