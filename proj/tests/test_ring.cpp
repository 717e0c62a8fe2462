#include <gtest/gtest.h>

#include "cleansr/catalog.hpp"
#include "cleansr/ring.hpp"
#include "cleansr/ring_build.hpp"
#include "test_support.hpp"

using namespace cleansr;
using cleansr::testing::element;
using cleansr::testing::names_of;

namespace {

std::vector<std::uint32_t> indices(const std::vector<RingElement>& xs) {
  std::vector<std::uint32_t> out;
  for (auto x : xs) out.push_back(x.index);
  return out;
}

}  // namespace

TEST(FiniteRing, CyclicInventory) {
  auto z6 = build_ring("Z6");
  EXPECT_EQ(names_of(z6, z6.idempotents()), (std::vector<std::string>{"0", "1", "3", "4"}));
  EXPECT_EQ(names_of(z6, nontrivial_idempotents(z6)), (std::vector<std::string>{"3", "4"}));
  auto z4 = build_ring("Z4");
  EXPECT_EQ(names_of(z4, z4.units()), (std::vector<std::string>{"1", "3"}));
}

TEST(FiniteRing, UnitClassesOfZ5) {
  auto z5 = build_ring("Z5");
  EXPECT_EQ(z5.name(*z5.inverse(element(z5, "2"))), "3");
  auto cls = classify_units(z5);
  EXPECT_EQ(names_of(z5, cls.involutory), (std::vector<std::string>{"1", "4"}));
  EXPECT_EQ(names_of(z5, cls.noninvolutory), (std::vector<std::string>{"2", "3"}));
  EXPECT_TRUE(unit_group_is_cyclic(z5));
  EXPECT_EQ(unit_order(z5, element(z5, "2")), 4u);
}

TEST(FiniteRing, SmallFieldsAndProducts) {
  auto v4 = build_ring("Z2 x Z2");
  EXPECT_EQ(names_of(v4, v4.units()), std::vector<std::string>{"(1,1)"});
  EXPECT_EQ(v4.name(v4.one()), "(1,1)");
  auto f8 = build_ring("GF(8)");
  EXPECT_EQ(f8.units().size(), 7u);
  EXPECT_TRUE(classify_units(f8).involutory.size() == 1);
  auto f4 = build_ring("GF(4)");
  EXPECT_EQ(classify_units(f4).noninvolutory.size(), 2u);
  EXPECT_TRUE(is_field(f4));
}

TEST(FiniteRing, OrthogonalIdempotents) {
  EXPECT_EQ(max_orthogonal_idempotents(build_ring("Z2 x Z3")).size(), 2u);
  auto f5 = build_ring("Z5");
  EXPECT_EQ(indices(max_orthogonal_idempotents(f5)), std::vector<std::uint32_t>{1});
  EXPECT_EQ(max_orthogonal_idempotents(build_ring("Z2 x Z2 x Z2")).size(), 3u);
  EXPECT_EQ(max_orthogonal_idempotents(build_ring("Z2 x GF(4) x Z3")).size(), 3u);
}

TEST(FiniteRing, LocalFactorCount) {
  EXPECT_EQ(local_factor_count(build_ring("Z8")), 1u);
  EXPECT_EQ(local_factor_count(build_ring("Z6")), 2u);
  EXPECT_EQ(local_factor_count(build_ring("Z2 x GF(4) x Z3")), 3u);
  EXPECT_EQ(local_factor_count(build_ring("Z30")), 3u);
}

TEST(FiniteRing, Locality) {
  EXPECT_TRUE(is_local(build_ring("Z9")));
  EXPECT_FALSE(is_local(build_ring("Z6")));
  EXPECT_TRUE(is_local(build_ring("Z2[x]/(x^2)")));
  EXPECT_FALSE(is_field(build_ring("Z2[x]/(x^2)")));
  EXPECT_TRUE(is_field(build_ring("Z3[x]/(x^2+1)")));
}

TEST(FiniteRing, Presentations) {
  auto r = build_ring("Z4[x]/(2x, x^2-2)");
  EXPECT_EQ(r.order(), 8u);
  EXPECT_EQ(r.units().size(), 4u);
  EXPECT_TRUE(is_local(r));
  EXPECT_EQ(build_ring("Z2[x,y]/(x^2, xy, y^2)").order(), 8u);
  EXPECT_EQ(build_ring("local8/Z2x3").order(), 8u);
}

TEST(FiniteRing, RejectsDegenerateSpecs) {
  EXPECT_THROW(build_ring("Z1"), MalformedSpec);
  EXPECT_THROW(build_ring("Z0"), MalformedSpec);
  EXPECT_THROW(build_ring("GF(6)"), MalformedSpec);
  EXPECT_THROW(build_ring("Z2[x]/(1)"), MalformedSpec);
  EXPECT_THROW(build_ring("local8/nope"), MalformedSpec);
  EXPECT_THROW(build_ring("Z2[x]/(x^2+x+1, x)"), MalformedSpec);
}

TEST(Catalog, LocalTableByOrder) {
  std::map<std::uint32_t, int> by_order;
  for (const auto& e : local_ring_table()) {
    auto r = build_ring(parse_ring_spec(e.definition));
    EXPECT_EQ(r.order(), e.order) << e.name;
    EXPECT_TRUE(is_local(r)) << e.name;
    ++by_order[r.order()];
  }
  EXPECT_EQ(by_order[8], 6);
  EXPECT_EQ(by_order[4], 3);
  EXPECT_EQ(by_order[6], 0);
  EXPECT_EQ(local_ring_table().size(), 13u);
}

TEST(Catalog, InventoryMatchesNaiveScan) {
  for (const auto& [name, spec] : catalog()) {
    auto r = build_ring(spec);
    EXPECT_EQ(indices(r.idempotents()), cleansr::testing::naive_idempotents(r)) << name;
    EXPECT_EQ(indices(r.units()), cleansr::testing::naive_units(r)) << name;
  }
}

TEST(Catalog, ProductCountsMultiply) {
  for (const auto& [name, spec] : catalog_products()) {
    if (!spec.is<spec::Product>()) continue;
    auto r = build_ring(spec);
    std::size_t units = 1, idem = 1;
    for (const auto& f : spec.as<spec::Product>().factors) {
      auto fr = build_ring(f);
      units *= fr.units().size();
      idem *= fr.idempotents().size();
    }
    EXPECT_EQ(r.units().size(), units) << name;
    EXPECT_EQ(r.idempotents().size(), idem) << name;
    EXPECT_EQ(max_orthogonal_idempotents(r).size(), local_factor_count(r)) << name;
  }
}

TEST(Catalog, UnitGroupPropositionsHold) {
  for (const auto& [name, spec] : catalog()) {
    auto rep = check_unit_group_propositions(build_ring(spec));
    EXPECT_TRUE(rep.consistent()) << name;
  }
  for (std::uint32_t m = 2; m <= 64; ++m) {
    auto rep = check_unit_group_propositions(build_ring(RingSpec::cyclic(m)));
    EXPECT_TRUE(rep.consistent()) << "Z" << m;
  }
}
