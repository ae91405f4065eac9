#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cactus/dp_engine.hpp"
#include "cactus/graph.hpp"
#include "cactus/interval.hpp"
#include "cactus/problem.hpp"
#include "cactus/tree.hpp"

namespace cactus {

struct IntervalItem {
  Weight lo = 0;
  Weight hi = 0;
  std::int32_t k = 1;
  Witness w;
  std::vector<std::uint32_t> parts;  // reduce steps: merged source elements
};

/// Elements sorted by (k, lo, hi), no duplicates.
struct IntervalTable {
  std::vector<IntervalItem> items;
};

/// DpPolicy for the interval-compressed DP. Every join and union is followed
/// by a reduce step that merges interfering intervals per cluster count.
class IntervalPolicy {
 public:
  using Set = IntervalTable;
  static constexpr bool kCyclePhases = false;
  static constexpr bool kReduces = true;

  IntervalPolicy(const CactusGraph& g, ProblemParams params) : g_(&g), params_(params) { params_.validate(); }

  const ProblemParams& params() const { return params_; }
  const CactusGraph& graph() const { return *g_; }

  Set leaf(Vertex v) const {
    Set s;
    if (g_->weight(v) <= params_.upper) s.items.push_back({g_->weight(v), g_->weight(v), 1, {}, {}});
    return s;
  }

  /// Merged upper ends are capped at u: no member of the underlying weight
  /// set lies above it.
  Set join(const Set& lhs, const Set& rhs, EdgeId, CyclePhase) const {
    Set out;
    for (std::uint32_t i = 0; i < lhs.items.size(); ++i) {
      const auto& a = lhs.items[i];
      for (std::uint32_t j = 0; j < rhs.items.size(); ++j) {
        const auto& b = rhs.items[j];
        const std::int32_t k = a.k + b.k;
        if (b.hi >= params_.lower && b.lo <= params_.upper && k <= params_.clusters) {
          out.items.push_back({a.lo, a.hi, k, {i, j, false}, {}});
        }
        if (a.lo + b.lo <= params_.upper && k - 1 <= params_.clusters) {
          out.items.push_back({a.lo + b.lo, std::min(a.hi + b.hi, params_.upper), k - 1, {i, j, true}, {}});
        }
      }
    }
    normalize(out);
    return out;
  }

  Set unite(std::span<const Set* const> sets) const {
    Set out;
    for (std::uint32_t op = 0; op < sets.size(); ++op) {
      const auto& items = sets[op]->items;
      for (std::uint32_t i = 0; i < items.size(); ++i) {
        out.items.push_back({items[i].lo, items[i].hi, items[i].k, {op, i, false}, {}});
      }
    }
    normalize(out);
    return out;
  }

  /// Merges interfering intervals of equal count; each result lists the
  /// source elements it absorbed. Checks that no count k keeps more than k
  /// intervals.
  Set reduce(const Set& src) const {
    Set out;
    const Weight slack = params_.slack();
    for (std::uint32_t i = 0; i < src.items.size(); ++i) {
      const auto& it = src.items[i];
      if (!out.items.empty() && out.items.back().k == it.k && it.lo - out.items.back().hi <= slack) {
        auto& cur = out.items.back();
        cur.hi = std::max(cur.hi, it.hi);
        cur.parts.push_back(i);
      } else {
        out.items.push_back({it.lo, it.hi, it.k, {}, {i}});
      }
    }
    std::int32_t run_k = 0;
    std::int32_t run = 0;
    for (const auto& it : out.items) {
      run = it.k == run_k ? run + 1 : 1;
      run_k = it.k;
      if (run > it.k) {
        throw InvariantViolation("interval count " + std::to_string(run) + " exceeds cluster count " +
                                 std::to_string(it.k));
      }
    }
    return out;
  }

  std::size_t size(const Set& s) const { return s.items.size(); }

 private:
  static void normalize(Set& s) {
    std::stable_sort(s.items.begin(), s.items.end(), [](const IntervalItem& a, const IntervalItem& b) {
      return std::tie(a.k, a.lo, a.hi) < std::tie(b.k, b.lo, b.hi);
    });
    auto same = [](const IntervalItem& a, const IntervalItem& b) { return a.k == b.k && a.lo == b.lo && a.hi == b.hi; };
    s.items.erase(std::unique(s.items.begin(), s.items.end(), same), s.items.end());
  }

  const CactusGraph* g_;
  ProblemParams params_;
};

using IntervalDp = CactusDp<IntervalPolicy>;

inline IntervalSet to_interval_set(const IntervalTable& table) {
  IntervalSet s;
  for (const auto& it : table.items) s.insert(it.k, {it.lo, it.hi});
  return s;
}

inline IntervalDp run_interval_dp(const CactusGraph& g, const CactusTree& tree, const ProblemParams& params,
                                  DpOptions options = {}) {
  IntervalDp dp(tree, IntervalPolicy(g, params), options);
  dp.run();
  return dp;
}

/// I(T_v^i) for every vertex v and evaluated prefix length i.
inline std::map<std::pair<Vertex, std::size_t>, IntervalSet> interval_subtree_sets(const CactusGraph& g,
                                                                                   const CactusTree& tree,
                                                                                   const ProblemParams& params) {
  const IntervalDp dp = run_interval_dp(g, tree, params);
  std::map<std::pair<Vertex, std::size_t>, IntervalSet> out;
  for (Vertex v = 0; v < tree.num_vertices(); ++v) {
    for (std::size_t i = 0; i < dp.prefix_count(v); ++i) {
      out.emplace(std::make_pair(v, i), to_interval_set(dp.set(dp.prefix(v, i))));
    }
  }
  return out;
}

/// Index of the first root element with count k whose interval meets [l, u].
inline std::optional<std::uint32_t> feasible_root_item(const IntervalTable& root, const ProblemParams& params,
                                                       std::int32_t k) {
  for (std::uint32_t i = 0; i < root.items.size(); ++i) {
    const auto& it = root.items[i];
    if (it.k == k && it.lo <= params.upper && it.hi >= params.lower) return i;
  }
  return std::nullopt;
}

/// Fixed-count decision via the interval-compressed DP.
inline bool decide_p_partition_poly(const CactusGraph& g, const ProblemParams& params,
                                    std::optional<Vertex> root = std::nullopt) {
  params.validate();
  if (trivially_infeasible(g, params)) return false;
  const CactusTree tree = build_tree(g, root.value_or(default_root(g)));
  const IntervalDp dp = run_interval_dp(g, tree, params, {.all_configurations = false, .keep_trace = false});
  return feasible_root_item(dp.root_set(), params, params.clusters).has_value();
}

}  // namespace cactus
