#include <gtest/gtest.h>

#include "support.hpp"

namespace cactus {
namespace {

ClusterBounds bounds_of(const ProblemParams& params) {
  ClusterBounds b{params.lower, params.upper};
  b.count = static_cast<std::size_t>(params.clusters);
  return b;
}

TEST(Reconstruct, SingleVertex) {
  const auto g = testing::make({3}, {});
  for (auto algo : {Algorithm::kTupleSet, Algorithm::kInterval}) {
    const auto r = find_p_partition(g, {0, 3, 1}, algo);
    ASSERT_TRUE(r.feasible());
    EXPECT_TRUE(r.partition->cut_edges.empty());
    EXPECT_TRUE(r.raw_cut.empty());
  }
}

TEST(Reconstruct, PathOfTwos) {
  const auto g = testing::path({2, 2, 2});
  const ProblemParams params{2, 4, 2};
  for (auto algo : {Algorithm::kTupleSet, Algorithm::kInterval}) {
    const auto r = find_p_partition(g, params, algo);
    ASSERT_TRUE(r.feasible());
    EXPECT_EQ(r.partition->cut_edges.size(), 1u);
    EXPECT_TRUE(satisfies(g, *r.partition, bounds_of(params)));
    // Same input, same cut.
    EXPECT_EQ(find_p_partition(g, params, algo).raw_cut, r.raw_cut);
  }
}

TEST(Reconstruct, TriangleSingletons) {
  const auto g = testing::triangle();
  for (auto algo : {Algorithm::kTupleSet, Algorithm::kInterval}) {
    const auto r = find_p_partition(g, {1, 1, 3}, algo);
    ASSERT_TRUE(r.feasible());
    EXPECT_EQ(r.partition->num_clusters(), 3u);
    EXPECT_EQ(r.partition->cut_edges.size(), 3u);
  }
}

TEST(Reconstruct, WholeCycleKeepsRemovedEdgeOnlyInRawCut) {
  const auto g = testing::triangle();
  const auto r = find_p_partition(g, {3, 3, 1}, Algorithm::kTupleSet);
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.raw_cut.size(), 1u);
  EXPECT_TRUE(r.partition->cut_edges.empty());
}

TEST(Reconstruct, InfeasibleAndTrivial) {
  const auto tri = testing::triangle();
  EXPECT_EQ(find_p_partition(tri, {2, 2, 2}).status, Status::kInfeasible);
  EXPECT_EQ(find_p_partition(tri, {0, 9, 4}).status, Status::kTriviallyInfeasible);
  EXPECT_EQ(find_p_partition(testing::path({1, 5}), {0, 4, 1}).status, Status::kTriviallyInfeasible);
}

TEST(Reconstruct, RandomInstancesAreValid) {
  std::size_t feasible = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto g = testing::random_small(seed, 1, 16);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 6; ++t) {
      const auto params = testing::random_params(g, rng);
      const auto a = find_p_partition(g, params, Algorithm::kTupleSet);
      const auto b = find_p_partition(g, params, Algorithm::kInterval);
      ASSERT_EQ(a.feasible(), b.feasible()) << "seed " << seed;
      if (!a.feasible()) continue;
      ++feasible;
      EXPECT_EQ(constraint_violation(g, *a.partition, bounds_of(params)), std::nullopt) << "seed " << seed;
      EXPECT_EQ(constraint_violation(g, *b.partition, bounds_of(params)), std::nullopt) << "seed " << seed;
    }
  }
  EXPECT_GT(feasible, 100u);
}

TEST(Reconstruct, IntervalTraceRootWeightLiesInWindow) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto g = testing::random_small(seed, 2, 14);
    std::mt19937_64 rng(seed);
    const auto params = testing::random_params(g, rng);
    if (trivially_infeasible(g, params)) continue;
    const auto tree = build_tree(g);
    const auto dp = run_interval_dp(g, tree, params);
    const auto index = feasible_root_item(dp.root_set(), params, params.clusters);
    if (!index) continue;
    const auto trace = trace_interval(dp, dp.root(), *index, params.lower, params.upper);
    const auto p = canonicalize_partition(g, trace.cut);
    EXPECT_EQ(p.clusters[p.cluster_of[tree.root()]].weight, trace.root_weight);
    EXPECT_GE(trace.root_weight, params.lower);
    EXPECT_LE(trace.root_weight, params.upper);
  }
}

TEST(BackRecord, LeafAndJoin) {
  const auto g = testing::path({1, 2});
  const ProblemParams params{0, 3, 2};
  const auto dp = run_count_dp(g, build_tree(g, 0), params);
  EXPECT_FALSE(back_record(dp, dp.prefix(0, 0), 0).has_value());
  const auto& root = dp.root_set().items;
  ASSERT_EQ(root.size(), 2u);
  for (std::uint32_t i = 0; i < root.size(); ++i) {
    const auto rec = back_record(dp, dp.root(), i);
    ASSERT_TRUE(rec);
    EXPECT_EQ(rec->merged, root[i].x == 3);
    EXPECT_EQ(rec->child_element, 0u);
  }
}

TEST(BackRecord, UnionNamesTheConfiguration) {
  const auto g = testing::triangle();
  const auto dp = run_count_dp(g, build_tree(g, 0), {0, 3, 3});
  for (std::uint32_t i = 0; i < dp.root_set().items.size(); ++i) {
    const auto rec = back_record(dp, dp.root(), i);
    ASSERT_TRUE(rec && rec->configuration);
    EXPECT_GE(*rec->configuration, 1u);
    EXPECT_LE(*rec->configuration, 2u);
  }
}

TEST(BackRecord, MergedIntervalListsItsConstituents) {
  RawGraph r;
  for (auto [id, w] : std::vector<std::pair<std::string, Weight>>{
           {"v0", 0}, {"v1", 4}, {"v2", 4}, {"v3", 1}, {"v4", 3}, {"v5", 4}}) {
    r.vertices.push_back({id, w, std::nullopt});
  }
  for (auto [u, v] : std::vector<std::pair<std::string, std::string>>{
           {"v1", "v2"}, {"v1", "v0"}, {"v2", "v4"}, {"v0", "v5"}, {"v5", "v3"}}) {
    r.edges.push_back({u, v, std::nullopt, std::nullopt});
  }
  const auto g = validate_cactus(r);
  const ProblemParams params{0, 13, 6};
  const auto dp = run_interval_dp(g, build_tree(g), params);
  const auto& root = dp.root_set().items;
  const auto it = std::find_if(root.begin(), root.end(), [](const IntervalItem& x) { return x.k == 5; });
  ASSERT_NE(it, root.end());
  const auto rec = back_record(dp, dp.root(), static_cast<std::uint32_t>(it - root.begin()));
  ASSERT_TRUE(rec);
  EXPECT_EQ(rec->merge_list.size(), 3u);
}

}  // namespace
}  // namespace cactus
