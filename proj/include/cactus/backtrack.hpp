#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cactus/dp_engine.hpp"
#include "cactus/graph.hpp"
#include "cactus/interval_dp.hpp"
#include "cactus/problem.hpp"
#include "cactus/tree.hpp"
#include "cactus/tuple_dp.hpp"

namespace cactus {

/// Human-facing view of the witness stored with one DP element.
struct BackRecord {
  bool merged = false;
  /// Element of the child-side set it was built from (joins only).
  std::optional<std::uint32_t> child_element;
  std::optional<std::size_t> configuration;
  /// Pre-merge elements absorbed by a merged interval.
  std::vector<std::uint32_t> merge_list;
};

/// Witness of element `index` of step `id`; nullopt for leaf elements.
template <class Dp>
std::optional<BackRecord> back_record(const Dp& dp, StepId id, std::uint32_t index) {
  const auto& step = dp.step(id);
  const auto& item = dp.set(id).items.at(index);
  BackRecord rec;
  switch (step.kind) {
    case StepKind::kLeaf:
      return std::nullopt;
    case StepKind::kJoin:
      rec.merged = item.w.merged;
      rec.child_element = item.w.second;
      return rec;
    case StepKind::kUnion: {
      const StepId source = step.operands[item.w.first];
      rec.child_element = item.w.second;
      const auto& tree = dp.tree();
      for (CycleId c = 0; c < tree.cycles().size(); ++c) {
        for (const auto& r : dp.configurations(c)) {
          if (r.step == source) rec.configuration = r.configuration;
        }
      }
      return rec;
    }
    case StepKind::kReduce:
      if constexpr (requires { item.parts; }) rec.merge_list = item.parts;
      return rec;
    case StepKind::kCharge:
    case StepKind::kClose:
      rec.child_element = item.w.first;
      return rec;
  }
  return std::nullopt;
}

/// Walks the witnesses of a tuple-set DP element and collects the cut edges
/// of one partition it stands for. The removed edge of every traversed cycle
/// configuration is included; canonicalization drops it when the cycle stays
/// in one cluster.
template <class Rules>
std::vector<EdgeId> trace_tuple(const CactusDp<TuplePolicy<Rules>>& dp, StepId id, std::uint32_t index) {
  std::vector<EdgeId> cut;
  std::vector<std::pair<StepId, std::uint32_t>> todo{{id, index}};
  while (!todo.empty()) {
    auto [sid, idx] = todo.back();
    todo.pop_back();
    const auto& step = dp.step(sid);
    const auto& items = dp.set(sid).items;
    if (idx >= items.size()) throw WitnessNotFound("tuple witness points past the end of its set");
    const Tuple& t = items[idx];
    switch (step.kind) {
      case StepKind::kLeaf:
        break;
      case StepKind::kJoin:
        if (!t.w.merged) cut.push_back(step.edge);
        todo.emplace_back(step.rhs, t.w.second);
        todo.emplace_back(step.lhs, t.w.first);
        break;
      case StepKind::kCharge:
        todo.emplace_back(step.lhs, t.w.first);
        break;
      case StepKind::kClose:
        cut.push_back(step.edge);
        todo.emplace_back(step.lhs, Rules::kCyclePhases ? t.w.first : idx);
        break;
      case StepKind::kUnion:
        todo.emplace_back(step.operands[t.w.first], t.w.second);
        break;
      case StepKind::kReduce:
        throw WitnessNotFound("tuple-set DP has no reduce steps");
    }
  }
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  return cut;
}

namespace detail {

class IntervalTracer {
 public:
  IntervalTracer(const IntervalDp& dp) : dp_(dp), params_(dp.policy().params()) {}

  /// Returns the root-cluster weight of the traced partition; it lies in
  /// [lo, hi]. Requires the element's interval to meet a window of width at
  /// least u - l that ends at or below u.
  Weight trace(StepId id, std::uint32_t index, Weight lo, Weight hi) {
    const auto& step = dp_.step(id);
    const auto& items = dp_.set(id).items;
    if (index >= items.size()) throw WitnessNotFound("interval witness points past the end of its set");
    const IntervalItem& item = items[index];
    if (item.lo > hi || item.hi < lo) throw WitnessNotFound("interval does not meet the feasibility window");
    switch (step.kind) {
      case StepKind::kLeaf:
        return item.lo;
      case StepKind::kReduce: {
        const auto& src = dp_.set(step.lhs).items;
        for (std::uint32_t part : item.parts) {
          if (src[part].lo <= hi && src[part].hi >= lo) return trace(step.lhs, part, lo, hi);
        }
        throw WitnessNotFound("no merged constituent meets the feasibility window");
      }
      case StepKind::kUnion:
        return trace(step.operands[item.w.first], item.w.second, lo, hi);
      case StepKind::kClose:
        cut_.push_back(step.edge);
        return trace(step.lhs, index, lo, hi);
      case StepKind::kCharge:
        return trace(step.lhs, item.w.first, lo, hi);
      case StepKind::kJoin: {
        if (!item.w.merged) {
          cut_.push_back(step.edge);
          trace(step.rhs, item.w.second, params_.lower, params_.upper);
          return trace(step.lhs, item.w.first, lo, hi);
        }
        // Pick the child's weight first from the window that still leaves a
        // parent weight in [lo, hi], then fix the parent's window around it.
        const IntervalItem& parent = dp_.set(step.lhs).items[item.w.first];
        const Weight child = trace(step.rhs, item.w.second, lo - parent.hi, hi - parent.lo);
        return child + trace(step.lhs, item.w.first, lo - child, hi - child);
      }
    }
    throw WitnessNotFound("unknown step kind");
  }

  std::vector<EdgeId> take_cut() {
    std::sort(cut_.begin(), cut_.end());
    cut_.erase(std::unique(cut_.begin(), cut_.end()), cut_.end());
    return std::move(cut_);
  }

 private:
  const IntervalDp& dp_;
  ProblemParams params_;
  std::vector<EdgeId> cut_;
};

}  // namespace detail

struct IntervalTrace {
  std::vector<EdgeId> cut;
  Weight root_weight = 0;
};

/// Traces interval element `index` of step `id` inside the window [lo, hi].
inline IntervalTrace trace_interval(const IntervalDp& dp, StepId id, std::uint32_t index, Weight lo, Weight hi) {
  detail::IntervalTracer tracer(dp);
  IntervalTrace out;
  out.root_weight = tracer.trace(id, index, lo, hi);
  out.cut = tracer.take_cut();
  return out;
}

struct SolveStats {
  std::size_t vertices = 0;
  std::size_t cycles = 0;
  std::size_t max_cycle_length = 0;
  std::size_t dp_steps = 0;
  std::size_t dp_elements = 0;
  std::size_t max_set_size = 0;
  double wall_ms = 0.0;

  void absorb(const CactusTree& tree, const DpStats& dp) {
    vertices = tree.num_vertices();
    cycles = tree.cycles().size();
    max_cycle_length = tree.max_cycle_length();
    dp_steps += dp.steps;
    dp_elements += dp.elements;
    max_set_size = std::max(max_set_size, dp.max_set_size);
  }
};

struct PartitionResult {
  Status status = Status::kInfeasible;
  std::optional<Partition> partition;
  std::vector<EdgeId> raw_cut;  // as collected by backtracking, before canonicalization
  Weight objective = 0;
  SolveStats stats;

  bool feasible() const { return status == Status::kFeasible; }
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Reconstructs a partition from a finished tuple-set count DP: the root
/// element with count k and weight in [l, u] of lowest weight.
inline std::optional<std::vector<EdgeId>> reconstruct_tuple(const CountDp& dp, std::int32_t k) {
  const auto& params = dp.policy().rules().params;
  const auto& items = dp.root_set().items;
  for (std::uint32_t i = 0; i < items.size(); ++i) {
    if (items[i].k == k && items[i].x >= params.lower && items[i].x <= params.upper) {
      return trace_tuple(dp, dp.root(), i);
    }
  }
  return std::nullopt;
}

/// Reconstructs a partition from a finished interval DP for count k.
inline std::optional<std::vector<EdgeId>> reconstruct_interval(const IntervalDp& dp, std::int32_t k) {
  const auto& params = dp.policy().params();
  const auto index = feasible_root_item(dp.root_set(), params, k);
  if (!index) return std::nullopt;
  auto trace = trace_interval(dp, dp.root(), *index, params.lower, params.upper);
  return std::move(trace.cut);
}

/// Decides the fixed-count problem and, when feasible, returns one partition
/// with exactly `params.clusters` clusters of weight in [l, u].
inline PartitionResult find_p_partition(const CactusGraph& g, const ProblemParams& params,
                                        Algorithm algorithm = Algorithm::kInterval,
                                        std::optional<Vertex> root = std::nullopt) {
  params.validate();
  detail::Stopwatch clock;
  PartitionResult result;
  if (trivially_infeasible(g, params)) {
    result.status = Status::kTriviallyInfeasible;
    result.stats.vertices = g.num_vertices();
    result.stats.cycles = g.num_cycles();
    return result;
  }
  const CactusTree tree = build_tree(g, root.value_or(default_root(g)));
  std::optional<std::vector<EdgeId>> cut;
  if (algorithm == Algorithm::kTupleSet) {
    const CountDp dp = run_count_dp(g, tree, params);
    result.stats.absorb(tree, dp.stats());
    cut = reconstruct_tuple(dp, params.clusters);
  } else {
    const IntervalDp dp = run_interval_dp(g, tree, params);
    result.stats.absorb(tree, dp.stats());
    cut = reconstruct_interval(dp, params.clusters);
  }
  if (cut) {
    result.status = Status::kFeasible;
    result.raw_cut = *cut;
    result.partition = canonicalize_partition(g, *cut);
    result.objective = static_cast<Weight>(result.partition->num_clusters());
  }
  result.stats.wall_ms = clock.elapsed_ms();
  return result;
}

}  // namespace cactus
