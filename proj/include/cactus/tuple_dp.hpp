#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cactus/dp_engine.hpp"
#include "cactus/graph.hpp"
#include "cactus/problem.hpp"
#include "cactus/tree.hpp"

namespace cactus {

/// Dense set of (root-cluster weight x, cluster count k) with x in [0, u]
/// and k in [1, p].
class TupleSet {
 public:
  TupleSet() = default;
  TupleSet(Weight upper, std::int32_t max_count)
      : upper_(upper), max_count_(max_count), bits_(static_cast<std::size_t>(upper + 1) * max_count, false) {}

  Weight upper() const { return upper_; }
  std::int32_t max_count() const { return max_count_; }

  bool contains(Weight x, std::int32_t k) const {
    if (x < 0 || x > upper_ || k < 1 || k > max_count_) return false;
    return bits_[index(x, k)];
  }

  void insert(Weight x, std::int32_t k) {
    if (x < 0 || x > upper_ || k < 1 || k > max_count_) {
      throw std::out_of_range("tuple (" + std::to_string(x) + "," + std::to_string(k) + ") outside the set bounds");
    }
    if (!bits_[index(x, k)]) {
      bits_[index(x, k)] = true;
      ++count_;
    }
  }

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  /// Members in (x, k) order.
  std::vector<std::pair<Weight, std::int32_t>> tuples() const {
    std::vector<std::pair<Weight, std::int32_t>> out;
    out.reserve(count_);
    for (Weight x = 0; x <= upper_; ++x) {
      for (std::int32_t k = 1; k <= max_count_; ++k) {
        if (bits_[index(x, k)]) out.emplace_back(x, k);
      }
    }
    return out;
  }

  /// Weights present for a fixed count k, ascending.
  std::vector<Weight> weights(std::int32_t k) const {
    std::vector<Weight> out;
    for (Weight x = 0; x <= upper_; ++x) {
      if (contains(x, k)) out.push_back(x);
    }
    return out;
  }

  friend bool operator==(const TupleSet& a, const TupleSet& b) { return a.tuples() == b.tuples(); }

 private:
  std::size_t index(Weight x, std::int32_t k) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(max_count_) + static_cast<std::size_t>(k - 1);
  }

  Weight upper_ = -1;
  std::int32_t max_count_ = 0;
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

/// {(w, 1)}: the subtree consisting of a single vertex.
inline TupleSet leaf_set(Weight w, const ProblemParams& params) {
  if (w > params.upper) throw InvalidParams("vertex weight " + std::to_string(w) + " exceeds the upper bound");
  TupleSet s(params.upper, params.clusters);
  s.insert(w, 1);
  return s;
}

/// Combination of the set of T_v^{i-1} (lhs) with the set of the child
/// subtree T_{v_i} (rhs) over the edge (v, v_i): either the child's cluster
/// is closed off, which needs its weight to reach the lower bound, or it is
/// merged into the cluster of v.
inline TupleSet oplus(const TupleSet& lhs, const TupleSet& rhs, const ProblemParams& params) {
  TupleSet out(params.upper, params.clusters);
  const auto a = lhs.tuples();
  const auto b = rhs.tuples();
  for (const auto& [x1, k1] : a) {
    for (const auto& [x2, k2] : b) {
      if (params.lower <= x2 && k1 + k2 <= params.clusters) out.insert(x1, k1 + k2);
      if (x1 + x2 <= params.upper && k1 + k2 - 1 <= params.clusters) out.insert(x1 + x2, k1 + k2 - 1);
    }
  }
  return out;
}

/// One DP element: root-cluster key x (weight or size), cluster count k and
/// a secondary value y whose meaning depends on the rules (cost, weight or
/// capacity).
struct Tuple {
  Weight x = 0;
  std::int32_t k = 1;
  Weight y = 0;
  Witness w;
};

/// Elements sorted by (x, k), at most one per key.
struct TupleTable {
  std::vector<Tuple> items;
};

/// Which secondary value survives when two elements share a key.
enum class Preference { kFirst, kLower, kHigher };

template <class R>
concept TupleRules = requires(const R& r, const CactusGraph& g, Vertex v, const Tuple& a, Tuple& out, const Edge& e,
                              CyclePhase phase) {
  { r.x_cap() } -> std::convertible_to<Weight>;
  { r.k_cap() } -> std::convertible_to<std::int32_t>;
  { r.leaf(g, v) } -> std::same_as<std::optional<Tuple>>;
  { r.separate(a, a, e, out) } -> std::same_as<bool>;
  { r.merge(a, a, e, out) } -> std::same_as<bool>;
  { R::kPreference } -> std::convertible_to<Preference>;
  { R::kCyclePhases } -> std::convertible_to<bool>;
};

/// Plain (x, k) sets for the fixed-count problem.
struct CountRules {
  ProblemParams params;

  static constexpr Preference kPreference = Preference::kFirst;
  static constexpr bool kCyclePhases = false;

  Weight x_cap() const { return params.upper; }
  std::int32_t k_cap() const { return params.clusters; }

  std::optional<Tuple> leaf(const CactusGraph& g, Vertex v) const {
    if (g.weight(v) > params.upper) return std::nullopt;
    return Tuple{g.weight(v), 1, 0, {}};
  }
  bool separate(const Tuple& a, const Tuple& b, const Edge&, Tuple& out) const {
    if (b.x < params.lower || a.k + b.k > params.clusters) return false;
    out = Tuple{a.x, a.k + b.k, 0, {}};
    return true;
  }
  bool merge(const Tuple& a, const Tuple& b, const Edge&, Tuple& out) const {
    if (a.x + b.x > params.upper || a.k + b.k - 1 > params.clusters) return false;
    out = Tuple{a.x + b.x, a.k + b.k - 1, 0, {}};
    return true;
  }
};

namespace detail {

template <Preference Pref>
class TupleCollector {
 public:
  TupleCollector(Weight x_cap, std::int32_t k_cap)
      : k_cap_(static_cast<std::size_t>(k_cap)), slot_(static_cast<std::size_t>(x_cap + 1) * k_cap_, -1) {}

  void offer(const Tuple& t, Witness w) {
    const std::size_t key = static_cast<std::size_t>(t.x) * k_cap_ + static_cast<std::size_t>(t.k - 1);
    std::int32_t& s = slot_[key];
    if (s < 0) {
      s = static_cast<std::int32_t>(items_.size());
      items_.push_back(Tuple{t.x, t.k, t.y, w});
      return;
    }
    Tuple& held = items_[static_cast<std::size_t>(s)];
    if constexpr (Pref == Preference::kLower) {
      if (t.y < held.y) held = Tuple{t.x, t.k, t.y, w};
    } else if constexpr (Pref == Preference::kHigher) {
      if (t.y > held.y) held = Tuple{t.x, t.k, t.y, w};
    }
  }

  TupleTable take() {
    TupleTable out;
    out.items.reserve(items_.size());
    for (std::int32_t s : slot_) {
      if (s >= 0) out.items.push_back(items_[static_cast<std::size_t>(s)]);
    }
    return out;
  }

 private:
  std::size_t k_cap_;
  std::vector<std::int32_t> slot_;
  std::vector<Tuple> items_;
};

}  // namespace detail

/// DpPolicy over TupleTables driven by a set of combination rules.
template <TupleRules Rules>
class TuplePolicy {
 public:
  using Set = TupleTable;
  static constexpr bool kCyclePhases = Rules::kCyclePhases;
  static constexpr bool kReduces = false;

  TuplePolicy(const CactusGraph& g, Rules rules) : g_(&g), rules_(std::move(rules)) {
    const Weight cells = (rules_.x_cap() + 1) * static_cast<Weight>(rules_.k_cap());
    if (rules_.x_cap() < 0 || rules_.k_cap() < 1) throw InvalidParams("empty tuple key space");
    if (cells > (Weight{1} << 28)) throw InvalidParams("tuple key space too large for the tuple-set algorithm");
  }

  const Rules& rules() const { return rules_; }
  const CactusGraph& graph() const { return *g_; }

  Set leaf(Vertex v) const {
    Set s;
    if (auto t = rules_.leaf(*g_, v)) s.items.push_back(*t);
    return s;
  }

  Set join(const Set& lhs, const Set& rhs, EdgeId e, CyclePhase phase) const {
    detail::TupleCollector<Rules::kPreference> out(rules_.x_cap(), rules_.k_cap());
    const Edge& edge = g_->edge(e);
    const bool may_separate = phase != CyclePhase::kMergeOnly;
    Tuple t;
    for (std::uint32_t i = 0; i < lhs.items.size(); ++i) {
      const Tuple& a = lhs.items[i];
      for (std::uint32_t j = 0; j < rhs.items.size(); ++j) {
        const Tuple& b = rhs.items[j];
        if (may_separate && rules_.separate(a, b, edge, t)) out.offer(t, {i, j, false});
        if (rules_.merge(a, b, edge, t)) out.offer(t, {i, j, true});
      }
    }
    return out.take();
  }

  Set charge(const Set& src, EdgeId e) const
    requires Rules::kCyclePhases
  {
    Set out;
    const Edge& edge = g_->edge(e);
    for (std::uint32_t i = 0; i < src.items.size(); ++i) {
      Tuple t = src.items[i];
      if (rules_.charge(t, edge)) {
        t.w = {i, kNoIndex, false};
        out.items.push_back(t);
      }
    }
    return out;
  }

  Set close(const Set& src, EdgeId e, CyclePhase phase) const
    requires Rules::kCyclePhases
  {
    Set out;
    const Edge& edge = g_->edge(e);
    for (std::uint32_t i = 0; i < src.items.size(); ++i) {
      Tuple t = src.items[i];
      rules_.close(t, edge, phase);
      t.w = {i, kNoIndex, false};
      out.items.push_back(t);
    }
    return out;
  }

  Set unite(std::span<const Set* const> sets) const {
    detail::TupleCollector<Rules::kPreference> out(rules_.x_cap(), rules_.k_cap());
    for (std::uint32_t op = 0; op < sets.size(); ++op) {
      const auto& items = sets[op]->items;
      for (std::uint32_t i = 0; i < items.size(); ++i) out.offer(items[i], {op, i, false});
    }
    return out.take();
  }

  std::size_t size(const Set& s) const { return s.items.size(); }

 private:
  const CactusGraph* g_;
  Rules rules_;
};

using CountDp = CactusDp<TuplePolicy<CountRules>>;

inline TupleSet to_tuple_set(const TupleTable& table, const ProblemParams& params) {
  TupleSet s(params.upper, params.clusters);
  for (const auto& t : table.items) s.insert(t.x, t.k);
  return s;
}

/// Runs the tuple-set DP for the fixed-count problem on `tree`.
inline CountDp run_count_dp(const CactusGraph& g, const CactusTree& tree, const ProblemParams& params,
                            DpOptions options = {}) {
  params.validate();
  CountDp dp(tree, TuplePolicy<CountRules>(g, CountRules{params}), options);
  dp.run();
  return dp;
}

/// S(T_v^i) for every vertex v and every prefix length i that the DP
/// evaluates.
inline std::map<std::pair<Vertex, std::size_t>, TupleSet> subtree_sets(const CactusGraph& g, const CactusTree& tree,
                                                                       const ProblemParams& params) {
  const CountDp dp = run_count_dp(g, tree, params);
  std::map<std::pair<Vertex, std::size_t>, TupleSet> out;
  for (Vertex v = 0; v < tree.num_vertices(); ++v) {
    for (std::size_t i = 0; i < dp.prefix_count(v); ++i) {
      out.emplace(std::make_pair(v, i), to_tuple_set(dp.set(dp.prefix(v, i)), params));
    }
  }
  return out;
}

/// Set of the configuration-j evaluation of `cycle` at its start node.
inline TupleSet cycle_config_set(const CountDp& dp, CycleId cycle, std::size_t j, const ProblemParams& params) {
  const StepId s = dp.configuration(cycle, j);
  if (s == kNoStep) throw std::out_of_range("configuration " + std::to_string(j) + " was not evaluated");
  return to_tuple_set(dp.set(s), params);
}

/// Exact answer of the fixed-count decision problem via the tuple-set DP.
inline bool decide_p_partition(const CactusGraph& g, const ProblemParams& params,
                               std::optional<Vertex> root = std::nullopt) {
  params.validate();
  if (trivially_infeasible(g, params)) return false;
  const CactusTree tree = build_tree(g, root.value_or(default_root(g)));
  const CountDp dp = run_count_dp(g, tree, params, {.all_configurations = false, .keep_trace = false});
  for (const auto& t : dp.root_set().items) {
    if (t.k == params.clusters && t.x >= params.lower && t.x <= params.upper) return true;
  }
  return false;
}

}  // namespace cactus
