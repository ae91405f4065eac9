#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "cactus/backtrack.hpp"
#include "cactus/dp_engine.hpp"
#include "cactus/graph.hpp"
#include "cactus/interval_dp.hpp"
#include "cactus/problem.hpp"
#include "cactus/tree.hpp"
#include "cactus/tuple_dp.hpp"

namespace cactus {

/// x = root-cluster weight, y = cost of the edges cut so far. Without a
/// fixed cluster count k is not tracked (always 1).
struct CostRules {
  Weight lower = 0;
  Weight upper = 0;
  std::optional<std::int32_t> clusters;

  static constexpr Preference kPreference = Preference::kLower;
  static constexpr bool kCyclePhases = true;

  Weight x_cap() const { return upper; }
  std::int32_t k_cap() const { return clusters.value_or(1); }

  std::optional<Tuple> leaf(const CactusGraph& g, Vertex v) const {
    if (g.weight(v) > upper) return std::nullopt;
    return Tuple{g.weight(v), 1, 0, {}};
  }
  bool separate(const Tuple& a, const Tuple& b, const Edge& e, Tuple& out) const {
    if (b.x < lower) return false;
    const std::int32_t k = clusters ? a.k + b.k : 1;
    if (k > k_cap()) return false;
    out = Tuple{a.x, k, a.y + b.y + e.cost, {}};
    return true;
  }
  bool merge(const Tuple& a, const Tuple& b, const Edge&, Tuple& out) const {
    if (a.x + b.x > upper) return false;
    const std::int32_t k = clusters ? a.k + b.k - 1 : 1;
    if (k > k_cap()) return false;
    out = Tuple{a.x + b.x, k, a.y + b.y, {}};
    return true;
  }
  bool charge(Tuple&, const Edge&) const { return true; }
  void close(Tuple& t, const Edge& e, CyclePhase phase) const {
    if (phase == CyclePhase::kCut) t.y += e.cost;
  }
};

/// x = root-cluster size, y = root-cluster weight, which may not exceed
/// `max_weight`.
struct MinMaxRules {
  ProblemParams sizes;
  Weight max_weight = 0;

  static constexpr Preference kPreference = Preference::kLower;
  static constexpr bool kCyclePhases = false;

  Weight x_cap() const { return sizes.upper; }
  std::int32_t k_cap() const { return sizes.clusters; }

  std::optional<Tuple> leaf(const CactusGraph& g, Vertex v) const {
    if (g.size(v) > sizes.upper || g.weight(v) > max_weight) return std::nullopt;
    return Tuple{g.size(v), 1, g.weight(v), {}};
  }
  bool separate(const Tuple& a, const Tuple& b, const Edge&, Tuple& out) const {
    if (b.x < sizes.lower || a.k + b.k > sizes.clusters) return false;
    out = Tuple{a.x, a.k + b.k, a.y, {}};
    return true;
  }
  bool merge(const Tuple& a, const Tuple& b, const Edge&, Tuple& out) const {
    if (a.x + b.x > sizes.upper || a.y + b.y > max_weight || a.k + b.k - 1 > sizes.clusters) return false;
    out = Tuple{a.x + b.x, a.k + b.k - 1, a.y + b.y, {}};
    return true;
  }
};

/// x = root-cluster size, y = root-cluster weight; closed clusters must weigh
/// at least `min_weight`.
struct MaxMinRules {
  ProblemParams sizes;
  Weight min_weight = 0;

  static constexpr Preference kPreference = Preference::kHigher;
  static constexpr bool kCyclePhases = false;

  Weight x_cap() const { return sizes.upper; }
  std::int32_t k_cap() const { return sizes.clusters; }

  std::optional<Tuple> leaf(const CactusGraph& g, Vertex v) const {
    if (g.size(v) > sizes.upper) return std::nullopt;
    return Tuple{g.size(v), 1, g.weight(v), {}};
  }
  bool separate(const Tuple& a, const Tuple& b, const Edge&, Tuple& out) const {
    if (b.x < sizes.lower || b.y < min_weight || a.k + b.k > sizes.clusters) return false;
    out = Tuple{a.x, a.k + b.k, a.y, {}};
    return true;
  }
  bool merge(const Tuple& a, const Tuple& b, const Edge&, Tuple& out) const {
    if (a.x + b.x > sizes.upper || a.k + b.k - 1 > sizes.clusters) return false;
    out = Tuple{a.x + b.x, a.k + b.k - 1, a.y + b.y, {}};
    return true;
  }
};

/// x = root-cluster weight, y = capacity of the root cluster's cut edges so
/// far. Every cluster's capacity stays within `upper_capacity`.
struct CapacityRules {
  Weight lower_weight = 0;
  Weight upper_weight = 0;
  Weight upper_capacity = 0;
  std::int32_t max_count = 1;

  static constexpr Preference kPreference = Preference::kLower;
  static constexpr bool kCyclePhases = true;

  Weight x_cap() const { return upper_weight; }
  std::int32_t k_cap() const { return max_count; }

  std::optional<Tuple> leaf(const CactusGraph& g, Vertex v) const {
    if (g.weight(v) > upper_weight) return std::nullopt;
    return Tuple{g.weight(v), 1, 0, {}};
  }
  bool separate(const Tuple& a, const Tuple& b, const Edge& e, Tuple& out) const {
    if (b.x < lower_weight || b.y + e.capacity > upper_capacity || a.y + e.capacity > upper_capacity) return false;
    out = Tuple{a.x, a.k + b.k, a.y + e.capacity, {}};
    return true;
  }
  bool merge(const Tuple& a, const Tuple& b, const Edge&, Tuple& out) const {
    if (a.x + b.x > upper_weight || a.y + b.y > upper_capacity) return false;
    out = Tuple{a.x + b.x, a.k + b.k - 1, a.y + b.y, {}};
    return true;
  }
  bool charge(Tuple& t, const Edge& e) const {
    t.y += e.capacity;
    return t.y <= upper_capacity;
  }
  void close(Tuple&, const Edge&, CyclePhase) const {}
};

template <TupleRules Rules>
using RulesDp = CactusDp<TuplePolicy<Rules>>;

template <TupleRules Rules>
RulesDp<Rules> run_rules_dp(const CactusGraph& g, const CactusTree& tree, Rules rules, DpOptions options = {}) {
  RulesDp<Rules> dp(tree, TuplePolicy<Rules>(g, std::move(rules)), options);
  dp.run();
  return dp;
}

namespace detail {

inline PartitionResult trivial_result(const CactusGraph& g) {
  PartitionResult r;
  r.status = Status::kTriviallyInfeasible;
  r.stats.vertices = g.num_vertices();
  r.stats.cycles = g.num_cycles();
  return r;
}

inline void accept_cut(PartitionResult& r, const CactusGraph& g, std::vector<EdgeId> cut) {
  r.status = Status::kFeasible;
  r.raw_cut = std::move(cut);
  r.partition = canonicalize_partition(g, r.raw_cut);
}

/// Index of the root element accepted by `ok` that is best by `better`.
template <class Ok, class Better>
std::optional<std::uint32_t> pick_root(const TupleTable& root, Ok ok, Better better) {
  std::optional<std::uint32_t> best;
  for (std::uint32_t i = 0; i < root.items.size(); ++i) {
    if (!ok(root.items[i])) continue;
    if (!best || better(root.items[i], root.items[*best])) best = i;
  }
  return best;
}

inline std::int32_t vertex_count(const CactusGraph& g) { return static_cast<std::int32_t>(g.num_vertices()); }

}  // namespace detail

/// Partition into connected clusters of weight in [l, u] with the fewest
/// (kMin) or most (kMax) clusters.
inline PartitionResult count_partition(const CactusGraph& g, Weight lower, Weight upper, CountObjective objective,
                                       Algorithm algorithm = Algorithm::kInterval,
                                       std::optional<Vertex> root = std::nullopt) {
  const ProblemParams params{lower, upper, detail::vertex_count(g)};
  params.validate();
  detail::Stopwatch clock;
  if (g.max_weight() > upper) return detail::trivial_result(g);
  const CactusTree tree = build_tree(g, root.value_or(default_root(g)));
  PartitionResult result;
  const std::int32_t n = params.clusters;
  const bool ascending = objective == CountObjective::kMin;
  if (algorithm == Algorithm::kTupleSet) {
    const CountDp dp = run_count_dp(g, tree, params);
    result.stats.absorb(tree, dp.stats());
    for (std::int32_t i = 0; i < n && !result.feasible(); ++i) {
      const std::int32_t k = ascending ? i + 1 : n - i;
      if (auto cut = reconstruct_tuple(dp, k)) detail::accept_cut(result, g, std::move(*cut));
    }
  } else {
    const IntervalDp dp = run_interval_dp(g, tree, params);
    result.stats.absorb(tree, dp.stats());
    for (std::int32_t i = 0; i < n && !result.feasible(); ++i) {
      const std::int32_t k = ascending ? i + 1 : n - i;
      if (auto cut = reconstruct_interval(dp, k)) detail::accept_cut(result, g, std::move(*cut));
    }
  }
  if (result.feasible()) result.objective = static_cast<Weight>(result.partition->num_clusters());
  result.stats.wall_ms = clock.elapsed_ms();
  return result;
}

inline PartitionResult min_partition(const CactusGraph& g, Weight lower, Weight upper,
                                     Algorithm algorithm = Algorithm::kInterval,
                                     std::optional<Vertex> root = std::nullopt) {
  return count_partition(g, lower, upper, CountObjective::kMin, algorithm, root);
}

inline PartitionResult max_partition(const CactusGraph& g, Weight lower, Weight upper,
                                     Algorithm algorithm = Algorithm::kInterval,
                                     std::optional<Vertex> root = std::nullopt) {
  return count_partition(g, lower, upper, CountObjective::kMax, algorithm, root);
}

/// Cheapest set of cut edges leaving clusters of weight in [l, u], optionally
/// with exactly `clusters` clusters.
inline PartitionResult min_cost_partition(const CactusGraph& g, Weight lower, Weight upper,
                                          std::optional<std::int32_t> clusters = std::nullopt,
                                          std::optional<Vertex> root = std::nullopt) {
  ProblemParams{lower, upper, clusters.value_or(1)}.validate();
  detail::Stopwatch clock;
  if (g.max_weight() > upper || (clusters && *clusters > detail::vertex_count(g))) return detail::trivial_result(g);
  const CactusTree tree = build_tree(g, root.value_or(default_root(g)));
  const auto dp = run_rules_dp(g, tree, CostRules{lower, upper, clusters});
  PartitionResult result;
  result.stats.absorb(tree, dp.stats());
  const auto best = detail::pick_root(
      dp.root_set(),
      [&](const Tuple& t) { return t.x >= lower && (!clusters || t.k == *clusters); },
      [](const Tuple& a, const Tuple& b) { return a.y < b.y; });
  if (best) {
    detail::accept_cut(result, g, trace_tuple(dp, dp.root(), *best));
    result.objective = result.partition->cost;
  }
  result.stats.wall_ms = clock.elapsed_ms();
  return result;
}

namespace detail {

/// Smallest value in [lo, hi] accepted by the monotone predicate, if any.
inline std::optional<Weight> first_true(Weight lo, Weight hi, const std::function<bool(Weight)>& pred) {
  if (lo > hi || !pred(hi)) return std::nullopt;
  while (lo < hi) {
    const Weight mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

/// Largest value in [lo, hi] accepted by the antitone predicate, if any.
inline std::optional<Weight> last_true(Weight lo, Weight hi, const std::function<bool(Weight)>& pred) {
  if (lo > hi || !pred(lo)) return std::nullopt;
  while (lo < hi) {
    const Weight mid = lo + (hi - lo + 1) / 2;
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

template <TupleRules Rules>
std::optional<std::uint32_t> exact_count_root(const RulesDp<Rules>& dp, const ProblemParams& sizes,
                                               Weight min_root_weight) {
  return pick_root(
      dp.root_set(),
      [&](const Tuple& t) { return t.k == sizes.clusters && t.x >= sizes.lower && t.y >= min_root_weight; },
      [](const Tuple&, const Tuple&) { return false; });
}

}  // namespace detail

/// Exactly p clusters of size in [l, u] (`sizes`) minimizing the heaviest
/// cluster weight.
inline PartitionResult minmax_partition(const CactusGraph& g, const ProblemParams& sizes,
                                        std::optional<Vertex> root = std::nullopt) {
  sizes.validate();
  detail::Stopwatch clock;
  if (sizes.clusters > detail::vertex_count(g)) return detail::trivial_result(g);
  const CactusTree tree = build_tree(g, root.value_or(default_root(g)));
  PartitionResult result;
  auto decide = [&](Weight cap) {
    const auto dp = run_rules_dp(g, tree, MinMaxRules{sizes, cap}, {.all_configurations = false, .keep_trace = false});
    result.stats.absorb(tree, dp.stats());
    return detail::exact_count_root(dp, sizes, 0).has_value();
  };
  if (const auto best = detail::first_true(g.max_weight(), g.total_weight(), decide)) {
    const auto dp = run_rules_dp(g, tree, MinMaxRules{sizes, *best});
    result.stats.absorb(tree, dp.stats());
    const auto index = detail::exact_count_root(dp, sizes, 0);
    if (!index) throw WitnessNotFound("min-max optimum vanished on the traced run");
    detail::accept_cut(result, g, trace_tuple(dp, dp.root(), *index));
    result.objective = *best;
  }
  result.stats.wall_ms = clock.elapsed_ms();
  return result;
}

/// Exactly p clusters of size in [l, u] (`sizes`) maximizing the lightest
/// cluster weight.
inline PartitionResult maxmin_partition(const CactusGraph& g, const ProblemParams& sizes,
                                        std::optional<Vertex> root = std::nullopt) {
  sizes.validate();
  detail::Stopwatch clock;
  if (sizes.clusters > detail::vertex_count(g)) return detail::trivial_result(g);
  const CactusTree tree = build_tree(g, root.value_or(default_root(g)));
  PartitionResult result;
  auto decide = [&](Weight floor) {
    const auto dp = run_rules_dp(g, tree, MaxMinRules{sizes, floor}, {.all_configurations = false, .keep_trace = false});
    result.stats.absorb(tree, dp.stats());
    return detail::exact_count_root(dp, sizes, floor).has_value();
  };
  if (const auto best = detail::last_true(0, g.total_weight(), decide)) {
    const auto dp = run_rules_dp(g, tree, MaxMinRules{sizes, *best});
    result.stats.absorb(tree, dp.stats());
    const auto index = detail::exact_count_root(dp, sizes, *best);
    if (!index) throw WitnessNotFound("max-min optimum vanished on the traced run");
    detail::accept_cut(result, g, trace_tuple(dp, dp.root(), *index));
    result.objective = *best;
  }
  result.stats.wall_ms = clock.elapsed_ms();
  return result;
}

/// Clusters of weight in [lw, uw] whose cut edges have total capacity at most
/// uc each, with the fewest or most clusters.
inline PartitionResult capacity_partition(const CactusGraph& g, Weight lower_weight, Weight upper_weight,
                                          Weight upper_capacity, CountObjective objective,
                                          std::optional<Vertex> root = std::nullopt) {
  ProblemParams{lower_weight, upper_weight, 1}.validate();
  if (upper_capacity < 0) throw InvalidParams("capacity bound must be non-negative");
  detail::Stopwatch clock;
  if (g.max_weight() > upper_weight) return detail::trivial_result(g);
  const CactusTree tree = build_tree(g, root.value_or(default_root(g)));
  const CapacityRules rules{lower_weight, upper_weight, upper_capacity, detail::vertex_count(g)};
  const auto dp = run_rules_dp(g, tree, rules);
  PartitionResult result;
  result.stats.absorb(tree, dp.stats());
  const bool fewest = objective == CountObjective::kMin;
  const auto best = detail::pick_root(
      dp.root_set(), [&](const Tuple& t) { return t.x >= lower_weight; },
      [&](const Tuple& a, const Tuple& b) { return fewest ? a.k < b.k : a.k > b.k; });
  if (best) {
    detail::accept_cut(result, g, trace_tuple(dp, dp.root(), *best));
    result.objective = static_cast<Weight>(result.partition->num_clusters());
  }
  result.stats.wall_ms = clock.elapsed_ms();
  return result;
}

}  // namespace cactus
