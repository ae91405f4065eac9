#include <gtest/gtest.h>

#include "support.hpp"

namespace cactus {
namespace {

TEST(EnumerateAll, SmallCatalogs) {
  EXPECT_EQ(enumerate_all(testing::make({5}, {})).size(), 1u);
  EXPECT_EQ(enumerate_all(testing::triangle()).size(), 5u);
  EXPECT_EQ(enumerate_all(testing::path({1, 1, 1})).size(), 4u);
}

TEST(EnumerateAll, TreesHavePowerOfTwoPartitions) {
  for (std::size_t n = 1; n <= 12; ++n) {
    RandomCactusOptions o;
    o.vertices = n;
    o.cycle_density = 0.0;
    o.seed = n;
    const auto g = validate_cactus(random_cactus(o));
    EXPECT_EQ(enumerate_all(g).size(), std::size_t{1} << (n - 1));
  }
}

TEST(EnumerateAll, TwoImplementationsAgree) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto g = testing::random_small(seed, 1, 8);
    EXPECT_EQ(labelings_by_edge_subsets(g), labelings_by_cluster_growth(g)) << "seed " << seed;
  }
}

TEST(EnumerateAll, EveryPartitionIsValidAndDistinct) {
  const auto g = testing::random_small(11, 8, 8);
  const auto catalog = enumerate_all(g);
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& p : catalog.partitions) {
    EXPECT_EQ(structural_violation(g, p), std::nullopt);
    EXPECT_TRUE(seen.insert(p.cluster_of).second);
  }
}

TEST(EnumerateAll, TooLarge) {
  RandomCactusOptions o;
  o.vertices = 18;
  o.cycle_density = 0.0;
  const auto g = validate_cactus(random_cactus(o));
  EXPECT_THROW(enumerate_all(g), OracleTooLarge);
  EXPECT_NO_THROW(enumerate_all(g, 17));
}

TEST(OracleAnswers, Triangle) {
  const auto catalog = enumerate_all(testing::triangle());
  const auto singletons = oracle_decide(catalog, {1, 1, 3});
  EXPECT_TRUE(singletons.feasible);
  EXPECT_EQ(singletons.witnesses.size(), 1u);
  for (std::int32_t p = 1; p <= 3; ++p) EXPECT_FALSE(oracle_decide(catalog, {2, 2, p}).feasible);
  const auto pairs = oracle_decide(catalog, {1, 2, 2});
  EXPECT_EQ(pairs.witnesses.size(), 3u);
}

TEST(OracleAnswers, MinCostOnPaths) {
  RawGraph r = testing::raw({1, 1, 1}, {{0, 1}, {1, 2}});
  r.edges[0].cost = 5;
  r.edges[1].cost = 1;
  EXPECT_EQ(*oracle_min_cost(enumerate_all(validate_cactus(r)), 1, 2).objective, 1);
  // With weights 2 and u = 2 only singletons fit, so both edges are cut.
  for (auto& v : r.vertices) v.weight = 2;
  EXPECT_EQ(*oracle_min_cost(enumerate_all(validate_cactus(r)), 1, 2).objective, 6);
}

TEST(OracleAnswers, ObjectivesOnAStar) {
  RawGraph r = testing::raw({1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
  for (auto& e : r.edges) e.capacity = 1;
  const auto catalog = enumerate_all(validate_cactus(r));
  EXPECT_EQ(*oracle_min(catalog, 1, 4).objective, 1);
  EXPECT_EQ(*oracle_max(catalog, 1, 4).objective, 4);
  EXPECT_EQ(*oracle_capacity(catalog, 1, 1, 3, CountObjective::kMin).objective, 4);
  EXPECT_FALSE(oracle_capacity(catalog, 1, 1, 2, CountObjective::kMin).feasible);
  EXPECT_EQ(*oracle_minmax(catalog, {0, 4, 2}).objective, 3);
  EXPECT_EQ(*oracle_maxmin(catalog, {0, 4, 2}).objective, 1);
}

}  // namespace
}  // namespace cactus
