#include <gtest/gtest.h>

#include "support.hpp"

namespace cactus {
namespace {

using Tuples = std::vector<std::pair<Weight, std::int32_t>>;

TupleSet set_of(const ProblemParams& params, Tuples tuples) {
  TupleSet s(params.upper, params.clusters);
  for (auto [x, k] : tuples) s.insert(x, k);
  return s;
}

Tuples sorted(Tuples t) {
  std::sort(t.begin(), t.end());
  return t;
}

TEST(Oplus, SeparateAndMerge) {
  const ProblemParams params{0, 10, 5};
  const auto out = oplus(set_of(params, {{2, 1}}), set_of(params, {{3, 1}}), params);
  EXPECT_EQ(out.tuples(), sorted({{2, 2}, {5, 1}}));
}

TEST(Oplus, LowerBoundBlocksSeparation) {
  const ProblemParams params{3, 3, 2};
  const auto out = oplus(set_of(params, {{2, 1}}), set_of(params, {{1, 1}}), params);
  EXPECT_EQ(out.tuples(), (Tuples{{3, 1}}));
}

TEST(Oplus, EmptyOperand) {
  const ProblemParams params{0, 10, 5};
  EXPECT_TRUE(oplus(TupleSet(10, 5), set_of(params, {{3, 1}}), params).empty());
  EXPECT_TRUE(oplus(set_of(params, {{3, 1}}), TupleSet(10, 5), params).empty());
}

TEST(LeafSet, Bounds) {
  const ProblemParams params{0, 10, 3};
  EXPECT_EQ(leaf_set(4, params).tuples(), (Tuples{{4, 1}}));
  EXPECT_EQ(leaf_set(0, params).tuples(), (Tuples{{0, 1}}));
  EXPECT_EQ(leaf_set(10, params).tuples(), (Tuples{{10, 1}}));
  EXPECT_THROW(leaf_set(11, params), InvalidParams);
}

TEST(SubtreeSets, TwoVertexTree) {
  const auto g = testing::path({1, 2});
  const ProblemParams params{0, 3, 2};
  const auto sets = subtree_sets(g, build_tree(g, 0), params);
  EXPECT_EQ(sets.at({0, 1}).tuples(), sorted({{3, 1}, {1, 2}}));
}

TEST(SubtreeSets, SingleVertex) {
  const auto g = testing::make({7}, {});
  const auto sets = subtree_sets(g, build_tree(g), {0, 9, 1});
  EXPECT_EQ(sets.at({0, 0}).tuples(), (Tuples{{7, 1}}));
}

TEST(SubtreeSets, TriangleUnion) {
  const auto g = testing::triangle();
  const ProblemParams params{0, 3, 3};
  const auto tree = build_tree(g, 0);
  const auto sets = subtree_sets(g, tree, params);
  EXPECT_EQ(sets.at({0, 1}).tuples(), sorted({{3, 1}, {1, 2}, {2, 2}, {1, 3}}));
}

TEST(SubtreeSets, TriangleConfigurations) {
  // Configuration 1 keeps the DFS path, configuration 2 hangs w_2 below w_0.
  const auto g = testing::triangle();
  const ProblemParams params{0, 3, 3};
  const auto tree = build_tree(g, 0);
  const auto dp = run_count_dp(g, tree, params);
  const auto& w = tree.cycle(0).path;
  const auto leaf = [&](Vertex v) { return leaf_set(g.weight(v), params); };
  const auto j1 = oplus(leaf(w[0]), oplus(leaf(w[1]), leaf(w[2]), params), params);
  const auto j2 = oplus(oplus(leaf(w[0]), leaf(w[1]), params), leaf(w[2]), params);
  EXPECT_EQ(cycle_config_set(dp, 0, 1, params), j1);
  EXPECT_EQ(cycle_config_set(dp, 0, 2, params), j2);
}

TEST(SubtreeSets, FourCycle) {
  const auto g = testing::make({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const ProblemParams params{1, 4, 4};
  const auto sets = subtree_sets(g, build_tree(g, 0), params);
  const auto& root = sets.at({0, 1});
  for (auto [x, k] : Tuples{{4, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {1, 4}}) {
    EXPECT_TRUE(root.contains(x, k)) << x << "," << k;
  }
  EXPECT_EQ(root.size(), 7u);
}

TEST(DecidePPartition, Examples) {
  const auto tri = testing::triangle();
  EXPECT_TRUE(decide_p_partition(tri, {1, 1, 3}));
  for (std::int32_t p = 1; p <= 3; ++p) EXPECT_FALSE(decide_p_partition(tri, {2, 2, p}));
  EXPECT_TRUE(decide_p_partition(testing::path({2, 2, 2}), {2, 4, 2}));
}

TEST(DecidePPartition, RejectsBadParams) {
  const auto tri = testing::triangle();
  EXPECT_THROW(decide_p_partition(tri, {3, 2, 1}), InvalidParams);
  EXPECT_THROW(decide_p_partition(tri, {0, 2, 0}), InvalidParams);
  EXPECT_THROW(decide_p_partition(tri, {-1, 2, 1}), InvalidParams);
}

TEST(DecidePPartition, TrivialPrecheck) {
  const auto g = testing::path({1, 5, 1});
  EXPECT_TRUE(trivially_infeasible(g, {0, 4, 1}));
  EXPECT_TRUE(trivially_infeasible(g, {0, 9, 4}));
  EXPECT_FALSE(decide_p_partition(g, {0, 4, 1}));
}

// The engine's join on a plain tree edge is the free-standing combination.
TEST(Engine, JoinMatchesOplus) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = testing::random_small(seed, 2, 10);
    std::mt19937_64 rng(seed);
    const auto params = testing::random_params(g, rng);
    if (trivially_infeasible(g, params)) continue;
    const auto tree = build_tree(g);
    const auto dp = run_count_dp(g, tree, params);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (std::size_t i = 0; i + 1 < dp.prefix_count(v); ++i) {
        if (tree.cycle_at_child(v, i) != kNoCycle) continue;
        const Vertex child = tree.children(v)[i].vertex;
        const auto child_set = to_tuple_set(dp.set(dp.prefix(child, dp.prefix_count(child) - 1)), params);
        if (tree.is_interior(child)) continue;
        const auto expect = oplus(to_tuple_set(dp.set(dp.prefix(v, i)), params), child_set, params);
        EXPECT_EQ(to_tuple_set(dp.set(dp.prefix(v, i + 1)), params), expect);
      }
    }
  }
}

// Every single-cluster tuple at the root weighs the whole graph.
TEST(Properties, SumConservation) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto g = testing::random_small(seed, 1, 12);
    const ProblemParams params{0, g.total_weight(), static_cast<std::int32_t>(g.num_vertices())};
    const auto dp = run_count_dp(g, build_tree(g), params);
    const auto root = to_tuple_set(dp.root_set(), params);
    EXPECT_EQ(root.weights(1), (std::vector<Weight>{g.total_weight()}));
  }
}

// Root tuples are exactly the (root-cluster weight, count) pairs of
// partitions whose other clusters weigh at least l.
TEST(Properties, RootSetMatchesEnumeration) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto g = testing::random_small(seed, 1, 9);
    if (g.num_edges() > 16) continue;
    std::mt19937_64 rng(seed);
    const auto params = testing::random_params(g, rng);
    if (trivially_infeasible(g, params)) continue;
    const auto tree = build_tree(g);
    const auto root = to_tuple_set(run_count_dp(g, tree, params).root_set(), params);
    TupleSet expect(params.upper, params.clusters);
    for (const auto& p : enumerate_all(g).partitions) {
      const auto k = static_cast<std::int32_t>(p.num_clusters());
      if (k > params.clusters) continue;
      const auto& mine = p.clusters[p.cluster_of[tree.root()]];
      bool ok = mine.weight <= params.upper;
      for (const auto& c : p.clusters) {
        if (&c != &mine) ok = ok && c.weight >= params.lower && c.weight <= params.upper;
      }
      if (ok) expect.insert(mine.weight, k);
    }
    EXPECT_EQ(root, expect) << "seed " << seed;
  }
}

}  // namespace
}  // namespace cactus
