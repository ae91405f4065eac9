#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cactus/graph.hpp"
#include "cactus/tree.hpp"

namespace cactus {

using StepId = std::uint32_t;
inline constexpr StepId kNoStep = std::numeric_limits<StepId>::max();
inline constexpr std::uint32_t kNoIndex = std::numeric_limits<std::uint32_t>::max();

/// Back-pointer carried by every DP element. Its meaning depends on the step
/// that produced the element:
///   join:   first = element of the parent-side set, second = element of the
///           child-side set, merged = clusters of both sides were joined;
///   union:  first = operand position, second = element of that operand;
///   charge/close: first = element of the source set.
struct Witness {
  std::uint32_t first = kNoIndex;
  std::uint32_t second = kNoIndex;
  bool merged = false;
};

enum class StepKind : std::uint8_t { kLeaf, kJoin, kCharge, kClose, kUnion, kReduce };

/// How cycle edges are combined inside one configuration.
enum class CyclePhase : std::uint8_t {
  kPlain,      // ordinary combination, nothing special about the removed edge
  kMergeOnly,  // every cycle edge merges: the whole cycle ends in one cluster
  kCut,        // the removed edge separates two clusters and is charged
};

template <class P>
concept DpPolicy = requires(const P& p, const typename P::Set& s, Vertex v, EdgeId e, CyclePhase phase,
                            std::span<const typename P::Set* const> many) {
  { p.leaf(v) } -> std::same_as<typename P::Set>;
  { p.join(s, s, e, phase) } -> std::same_as<typename P::Set>;
  { p.unite(many) } -> std::same_as<typename P::Set>;
  { p.size(s) } -> std::convertible_to<std::size_t>;
  { P::kCyclePhases } -> std::convertible_to<bool>;
  { P::kReduces } -> std::convertible_to<bool>;
};

struct DpOptions {
  /// Also evaluate configuration m of every cycle (normally skipped).
  bool all_configurations = false;
  /// Keep every intermediate set so that a partition can be traced back.
  bool keep_trace = true;
};

struct DpStats {
  std::size_t steps = 0;
  std::size_t elements = 0;
  std::size_t max_set_size = 0;
};

/// Bottom-up evaluation of a subtree-set DP over a CactusTree. Plain tree
/// edges are combined with the policy's join; a cycle is expanded at its
/// start node into its configurations, each evaluated as two descending
/// branches hanging off the start node, and the results are united.
///
/// Every intermediate set is a Step in an arena so that elements can be
/// traced back through their witnesses.
template <DpPolicy Policy>
class CactusDp {
 public:
  using Set = typename Policy::Set;

  struct Step {
    StepKind kind = StepKind::kLeaf;
    std::shared_ptr<const Set> set;
    StepId lhs = kNoStep;  // join: parent side; charge/close/reduce: source
    StepId rhs = kNoStep;  // join: child side
    std::vector<StepId> operands;
    EdgeId edge = kNoEdge;  // join: combined edge; charge/close: removed cycle edge
    Vertex vertex = kNoVertex;
    CyclePhase phase = CyclePhase::kPlain;
  };

  struct ConfigurationResult {
    std::size_t configuration;
    CyclePhase phase;
    StepId step;
  };

  CactusDp(const CactusTree& tree, Policy policy, DpOptions options = {})
      : tree_(tree), policy_(std::move(policy)), options_(options) {}

  void run() {
    const std::size_t n = tree_.num_vertices();
    prefix_.assign(n, {});
    full_.assign(n, kNoStep);
    base_.assign(n, kNoStep);
    configurations_.assign(tree_.cycles().size(), {});
    for (Vertex v : tree_.bottom_up()) process_vertex(v);
  }

  const Policy& policy() const { return policy_; }
  const CactusTree& tree() const { return tree_; }
  const Step& step(StepId id) const { return steps_[id]; }
  const Set& set(StepId id) const {
    if (!steps_[id].set) throw std::logic_error("CactusDp: intermediate set was released");
    return *steps_[id].set;
  }

  StepId root() const { return full_[tree_.root()]; }
  const Set& root_set() const { return set(root()); }

  /// Step holding the set of the subtree of v with its first i children.
  /// Interior cycle nodes stop one short of their child count.
  StepId prefix(Vertex v, std::size_t i) const { return i < prefix_[v].size() ? prefix_[v][i] : kNoStep; }
  std::size_t prefix_count(Vertex v) const { return prefix_[v].size(); }

  const std::vector<ConfigurationResult>& configurations(CycleId c) const { return configurations_[c]; }

  /// The configuration-j set at the start node (plain or cut phase).
  StepId configuration(CycleId c, std::size_t j) const {
    for (const auto& r : configurations_[c]) {
      if (r.configuration == j && r.phase != CyclePhase::kMergeOnly) return r.step;
    }
    return kNoStep;
  }

  const DpStats& stats() const { return stats_; }
  bool traceable() const { return options_.keep_trace; }

 private:
  StepId add(Step s) {
    stats_.steps += 1;
    const std::size_t sz = policy_.size(*s.set);
    stats_.elements += sz;
    stats_.max_set_size = std::max(stats_.max_set_size, sz);
    steps_.push_back(std::move(s));
    return static_cast<StepId>(steps_.size() - 1);
  }

  StepId maybe_reduce(StepId src) {
    if constexpr (Policy::kReduces) {
      Step s;
      s.kind = StepKind::kReduce;
      s.set = std::make_shared<const Set>(policy_.reduce(*steps_[src].set));
      s.lhs = src;
      return add(std::move(s));
    } else {
      return src;
    }
  }

  StepId leaf(Vertex v) {
    Step s;
    s.kind = StepKind::kLeaf;
    s.set = std::make_shared<const Set>(policy_.leaf(v));
    s.vertex = v;
    return add(std::move(s));
  }

  StepId join(StepId parent, StepId child, EdgeId edge, CyclePhase phase) {
    Step s;
    s.kind = StepKind::kJoin;
    s.set = std::make_shared<const Set>(policy_.join(*steps_[parent].set, *steps_[child].set, edge, phase));
    s.lhs = parent;
    s.rhs = child;
    s.edge = edge;
    s.phase = phase;
    return maybe_reduce(add(std::move(s)));
  }

  StepId charge(StepId src, EdgeId removed) {
    if constexpr (Policy::kCyclePhases) {
      Step s;
      s.kind = StepKind::kCharge;
      s.set = std::make_shared<const Set>(policy_.charge(*steps_[src].set, removed));
      s.lhs = src;
      s.edge = removed;
      return add(std::move(s));
    } else {
      return src;
    }
  }

  StepId close(StepId src, EdgeId removed, CyclePhase phase) {
    Step s;
    s.kind = StepKind::kClose;
    if constexpr (Policy::kCyclePhases) {
      s.set = std::make_shared<const Set>(policy_.close(*steps_[src].set, removed, phase));
    } else {
      s.set = steps_[src].set;
    }
    s.lhs = src;
    s.edge = removed;
    s.phase = phase;
    steps_.push_back(std::move(s));
    stats_.steps += 1;
    return static_cast<StepId>(steps_.size() - 1);
  }

  StepId unite(std::vector<StepId> operands) {
    std::vector<const Set*> sets;
    sets.reserve(operands.size());
    for (StepId id : operands) sets.push_back(steps_[id].set.get());
    Step s;
    s.kind = StepKind::kUnion;
    s.set = std::make_shared<const Set>(policy_.unite(std::span<const Set* const>(sets)));
    s.operands = std::move(operands);
    return maybe_reduce(add(std::move(s)));
  }

  void process_vertex(Vertex v) {
    StepId cur = leaf(v);
    prefix_[v].push_back(cur);
    const auto& kids = tree_.children(v);
    const std::size_t limit = tree_.is_interior(v) ? kids.size() - 1 : kids.size();
    for (std::size_t i = 0; i < limit; ++i) {
      const CycleId c = tree_.cycle_at_child(v, i);
      if (c != kNoCycle) {
        cur = process_cycle(c, cur);
      } else {
        cur = join(cur, full_[kids[i].vertex], kids[i].edge, CyclePhase::kPlain);
      }
      prefix_[v].push_back(cur);
    }
    base_[v] = cur;
    if (!tree_.is_interior(v)) full_[v] = cur;
  }

  StepId process_cycle(CycleId c, StepId start_set) {
    const CycleRecord& cyc = tree_.cycle(c);
    const std::size_t m = cyc.length();
    const std::size_t last = options_.all_configurations ? m : m - 1;
    const std::size_t first_new = steps_.size();

    std::vector<CyclePhase> phases;
    if constexpr (Policy::kCyclePhases) {
      phases = {CyclePhase::kMergeOnly, CyclePhase::kCut};
    } else {
      phases = {CyclePhase::kPlain};
    }

    std::vector<StepId> results;
    for (std::size_t j = 1; j <= last; ++j) {
      const EdgeId removed = removed_edge(cyc, j);
      const std::size_t end_a = m - j;            // bottom of the first branch
      const std::size_t end_b = (m - j + 1) % m;  // bottom of the second branch (0 when j == 1)
      for (CyclePhase phase : phases) {
        auto base_of = [&](std::size_t i) {
          StepId b = base_[cyc.path[i]];
          if (phase == CyclePhase::kCut && (i == end_a || i == end_b)) b = charge(b, removed);
          return b;
        };
        // First branch: path[1..m-j], path[i] hangs below path[i-1].
        StepId top_a = kNoStep;
        for (std::size_t i = m - j; i >= 1; --i) {
          StepId node = base_of(i);
          if (top_a != kNoStep) node = join(node, top_a, cyc.ring_edge(i), phase);
          top_a = node;
        }
        // Second branch: path[m-1..m-j+1], path[i] hangs below path[i+1].
        StepId top_b = kNoStep;
        for (std::size_t i = m - j + 1; i <= m - 1; ++i) {
          StepId node = base_of(i);
          if (top_b != kNoStep) node = join(node, top_b, cyc.ring_edge(i - 1), phase);
          top_b = node;
        }
        StepId at_start = start_set;
        if (phase == CyclePhase::kCut && (end_a == 0 || end_b == 0)) at_start = charge(at_start, removed);
        if (top_a != kNoStep) at_start = join(at_start, top_a, cyc.ring_edge(0), phase);
        if (top_b != kNoStep) at_start = join(at_start, top_b, cyc.closing_edge, phase);
        const StepId closed = close(at_start, removed, phase);
        configurations_[c].push_back({j, phase, closed});
        results.push_back(closed);
      }
    }
    const StepId united = unite(results);
    if (!options_.keep_trace) {
      for (std::size_t id = first_new; id < steps_.size(); ++id) {
        if (id != united) steps_[id].set.reset();
      }
    }
    return united;
  }

  CactusTree tree_;
  Policy policy_;
  DpOptions options_;
  std::vector<Step> steps_;
  std::vector<std::vector<StepId>> prefix_;
  std::vector<StepId> full_;
  std::vector<StepId> base_;
  std::vector<std::vector<ConfigurationResult>> configurations_;
  DpStats stats_;
};

}  // namespace cactus
