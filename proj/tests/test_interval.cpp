#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

namespace cactus {
namespace {

using Intervals = std::vector<Interval>;

IntervalSet set_of(std::initializer_list<std::tuple<Weight, Weight, std::int32_t>> items) {
  IntervalSet s;
  for (auto [lo, hi, k] : items) s.insert(k, {lo, hi});
  return s;
}

TEST(IntervalsOf, Examples) {
  const std::vector<Weight> a{1, 2, 5, 9};
  EXPECT_EQ(intervals_of(a, 2), (Intervals{{1, 2}, {5, 5}, {9, 9}}));
  const std::vector<Weight> b{1, 3, 5};
  EXPECT_EQ(intervals_of(b, 2), (Intervals{{1, 5}}));
  EXPECT_TRUE(intervals_of({}, 2).empty());
}

TEST(IntervalsOf, ZeroSlackGivesSingletons) {
  const std::vector<Weight> a{4, 1, 2, 2};
  EXPECT_EQ(intervals_of(a, 0), (Intervals{{1, 1}, {2, 2}, {4, 4}}));
}

TEST(MergeIntervals, Examples) {
  EXPECT_EQ(merge_intervals({{1, 3}, {5, 6}}, 2), (Intervals{{1, 6}}));
  EXPECT_EQ(merge_intervals({{1, 2}, {6, 7}}, 2), (Intervals{{1, 2}, {6, 7}}));
  EXPECT_EQ(merge_intervals({{3, 8}}, 1), (Intervals{{3, 8}}));
}

TEST(MergeIntervals, ContainedAndChained) {
  EXPECT_EQ(merge_intervals({{0, 10}, {2, 3}, {12, 12}}, 2), (Intervals{{0, 12}}));
  EXPECT_EQ(merge_intervals({{9, 9}, {1, 1}, {5, 5}}, 4), (Intervals{{1, 9}}));
}

TEST(MergeIntervals, OrderIndependent) {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 300; ++round) {
    Intervals in;
    const int count = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < count; ++i) {
      const Weight lo = static_cast<Weight>(rng() % 40);
      in.push_back({lo, lo + static_cast<Weight>(rng() % 6)});
    }
    const Weight d = static_cast<Weight>(rng() % 5);
    const auto ref = merge_intervals(in, d);
    std::shuffle(in.begin(), in.end(), rng);
    EXPECT_EQ(merge_intervals(in, d), ref);
    for (std::size_t i = 1; i < ref.size(); ++i) EXPECT_GT(ref[i].lo - ref[i - 1].hi, d);
  }
}

TEST(IntervalOplus, Examples) {
  EXPECT_EQ(interval_oplus(set_of({{2, 2, 1}}), set_of({{3, 3, 1}}), {0, 10, 5}), set_of({{2, 2, 2}, {5, 5, 1}}));
  EXPECT_EQ(interval_oplus(set_of({{2, 4, 1}}), set_of({{3, 3, 1}}), {5, 9, 3}), set_of({{5, 7, 1}}));
  EXPECT_TRUE(interval_oplus(set_of({{2, 4, 1}}), IntervalSet{}, {0, 9, 3}).empty());
}

TEST(IntervalSubtreeSets, SingleVertex) {
  const auto g = testing::make({4}, {});
  const auto sets = interval_subtree_sets(g, build_tree(g), {0, 9, 1});
  EXPECT_EQ(sets.at({0, 0}), set_of({{4, 4, 1}}));
}

TEST(IntervalSubtreeSets, Star) {
  const auto g = testing::make({1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
  const auto sets = interval_subtree_sets(g, build_tree(g, 0), {0, 4, 4});
  const auto& root = sets.at({0, 3});
  EXPECT_EQ(root.by_count.at(1), (Intervals{{4, 4}}));
  // Leaves are pairwise non-adjacent: k clusters means 5 - k vertices around the root.
  EXPECT_EQ(root.by_count.at(2), (Intervals{{3, 3}}));
  EXPECT_EQ(root.by_count.at(4), (Intervals{{1, 1}}));
}

TEST(IntervalSubtreeSets, Triangle) {
  const auto g = testing::triangle();
  const auto sets = interval_subtree_sets(g, build_tree(g, 0), {1, 3, 3});
  EXPECT_EQ(sets.at({0, 1}), set_of({{3, 3, 1}, {1, 2, 2}, {1, 1, 3}}));
}

TEST(DecidePoly, Examples) {
  const auto tri = testing::triangle();
  EXPECT_TRUE(decide_p_partition_poly(tri, {1, 1, 3}));
  EXPECT_FALSE(decide_p_partition_poly(tri, {2, 2, 1}));
  EXPECT_TRUE(decide_p_partition_poly(testing::path({2, 2, 2}), {2, 4, 2}));
  EXPECT_FALSE(decide_p_partition_poly(testing::path({1, 5}), {0, 4, 1}));
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = testing::random_small(seed, 1, 15);
    EXPECT_TRUE(decide_p_partition_poly(g, {g.total_weight(), g.total_weight(), 1}));
  }
}

TEST(DecidePoly, DegenerateSlack) {
  // l = u: every interval is a single weight.
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const auto g = testing::random_small(seed, 1, 10);
    std::mt19937_64 rng(seed);
    auto params = testing::random_params(g, rng);
    params.lower = params.upper;
    if (trivially_infeasible(g, params)) continue;
    EXPECT_EQ(decide_p_partition_poly(g, params), decide_p_partition(g, params)) << "seed " << seed;
    const auto dp = run_interval_dp(g, build_tree(g), params);
    for (const auto& it : dp.root_set().items) EXPECT_EQ(it.lo, it.hi);
  }
}

TEST(Properties, CountBoundAndDecisionEquivalence) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto g = testing::random_small(seed, 1, 14);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 8; ++t) {
      const auto params = testing::random_params(g, rng);
      if (trivially_infeasible(g, params)) continue;
      ASSERT_NO_THROW({
        EXPECT_EQ(decide_p_partition_poly(g, params), decide_p_partition(g, params)) << "seed " << seed;
      });
    }
  }
}

TEST(Properties, IntervalEndpointsAreRealizable) {
  // Every low end is a weight of the tuple set; every interval lies inside
  // the hull of the tuple weights for its count, capped at u.
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const auto g = testing::random_small(seed, 2, 10);
    std::mt19937_64 rng(seed);
    const auto params = testing::random_params(g, rng);
    if (trivially_infeasible(g, params)) continue;
    const auto tree = build_tree(g);
    const auto tuples = subtree_sets(g, tree, params);
    const auto intervals = interval_subtree_sets(g, tree, params);
    for (const auto& [key, iset] : intervals) {
      const auto& ts = tuples.at(key);
      for (const auto& [k, list] : iset.by_count) {
        for (const auto& iv : list) {
          EXPECT_TRUE(ts.contains(iv.lo, k));
          EXPECT_LE(iv.hi, params.upper);
        }
      }
    }
  }
}

TEST(IntervalDp, ReduceRecordsParts) {
  const auto g = testing::make({1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
  const auto dp = run_interval_dp(g, build_tree(g, 0), {0, 4, 4});
  const auto& root = dp.root_set().items;
  const auto& src = dp.set(dp.step(dp.root()).lhs).items;
  std::size_t absorbed = 0;
  for (const auto& it : root) {
    ASSERT_FALSE(it.parts.empty());
    for (auto part : it.parts) {
      EXPECT_EQ(src[part].k, it.k);
      EXPECT_GE(src[part].lo, it.lo);
      EXPECT_LE(src[part].hi, it.hi);
    }
    absorbed += it.parts.size();
  }
  EXPECT_EQ(absorbed, src.size());
}

}  // namespace
}  // namespace cactus
