#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cactus/graph.hpp"
#include "cactus/partition_check.hpp"
#include "cactus/problem.hpp"

namespace cactus {

class OracleTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Every partition of V into connected clusters, each exactly once, in the
/// order of their cluster labelings.
struct PartitionCatalog {
  std::vector<Partition> partitions;

  std::size_t size() const { return partitions.size(); }
};

inline constexpr std::size_t kDefaultOracleEdges = 16;

/// Labels each vertex with the smallest vertex of its cluster.
using Labeling = std::vector<std::uint32_t>;

/// Deletes every subset of edges in turn and records the distinct component
/// structures.
inline std::set<Labeling> labelings_by_edge_subsets(const CactusGraph& g, std::size_t max_edges = kDefaultOracleEdges) {
  const std::size_t m = g.num_edges();
  if (m > max_edges || m >= 31) throw OracleTooLarge("oracle limited to " + std::to_string(max_edges) + " edges");
  std::set<Labeling> seen;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    detail::DisjointSets sets(g.num_vertices());
    for (EdgeId e = 0; e < m; ++e) {
      if (!(mask >> e & 1u)) sets.unite(g.edge(e).u, g.edge(e).v);
    }
    Labeling label(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) label[v] = sets.find(v);
    seen.insert(std::move(label));
  }
  return seen;
}

/// Independent enumeration: repeatedly grows a connected cluster around the
/// smallest unassigned vertex, over all admissible vertex subsets.
inline std::set<Labeling> labelings_by_cluster_growth(const CactusGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 20) throw OracleTooLarge("cluster-growth oracle limited to 20 vertices");
  std::set<Labeling> out;
  Labeling label(n, std::numeric_limits<std::uint32_t>::max());
  constexpr auto kFree = std::numeric_limits<std::uint32_t>::max();

  auto connected = [&](const std::vector<Vertex>& members) {
    std::vector<std::uint8_t> in(n, 0), seen(n, 0);
    for (Vertex v : members) in[v] = 1;
    std::vector<Vertex> stack{members.front()};
    seen[members.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(v)) {
        if (in[nb.vertex] && !seen[nb.vertex]) {
          seen[nb.vertex] = 1;
          ++reached;
          stack.push_back(nb.vertex);
        }
      }
    }
    return reached == members.size();
  };

  std::function<void()> grow = [&]() {
    auto first = std::find(label.begin(), label.end(), kFree);
    if (first == label.end()) {
      out.insert(label);
      return;
    }
    const auto seed = static_cast<Vertex>(first - label.begin());
    std::vector<Vertex> others;
    for (Vertex v = seed + 1; v < n; ++v) {
      if (label[v] == kFree) others.push_back(v);
    }
    for (std::uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
      std::vector<Vertex> members{seed};
      for (std::size_t i = 0; i < others.size(); ++i) {
        if (mask >> i & 1u) members.push_back(others[i]);
      }
      if (!connected(members)) continue;
      for (Vertex v : members) label[v] = seed;
      grow();
      for (Vertex v : members) label[v] = kFree;
    }
  };
  grow();
  return out;
}

inline Partition partition_from_labeling(const CactusGraph& g, const Labeling& label) {
  std::vector<EdgeId> cut;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (label[g.edge(e).u] != label[g.edge(e).v]) cut.push_back(e);
  }
  return canonicalize_partition(g, cut);
}

inline PartitionCatalog enumerate_all(const CactusGraph& g, std::size_t max_edges = kDefaultOracleEdges) {
  PartitionCatalog catalog;
  for (const auto& label : labelings_by_edge_subsets(g, max_edges)) {
    catalog.partitions.push_back(partition_from_labeling(g, label));
  }
  return catalog;
}

/// Exact answer of one problem: feasibility, optimal objective (when the
/// problem has one) and the catalog indices of all optimal partitions.
struct OracleAnswer {
  bool feasible = false;
  std::optional<Weight> objective;
  std::vector<std::size_t> witnesses;
};

namespace detail {

inline OracleAnswer oracle_optimize(const PartitionCatalog& catalog, const std::function<bool(const Partition&)>& admissible,
                                    const std::function<Weight(const Partition&)>& value, bool minimize) {
  OracleAnswer ans;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const Partition& p = catalog.partitions[i];
    if (!admissible(p)) continue;
    const Weight v = value(p);
    if (!ans.feasible || (minimize ? v < *ans.objective : v > *ans.objective)) {
      ans.feasible = true;
      ans.objective = v;
      ans.witnesses.clear();
    }
    if (v == *ans.objective) ans.witnesses.push_back(i);
  }
  return ans;
}

inline bool weights_within(const Partition& p, Weight lower, Weight upper) {
  return std::all_of(p.clusters.begin(), p.clusters.end(),
                     [&](const Cluster& c) { return c.weight >= lower && c.weight <= upper; });
}

inline bool sizes_within(const Partition& p, Weight lower, Weight upper) {
  return std::all_of(p.clusters.begin(), p.clusters.end(),
                     [&](const Cluster& c) { return c.size >= lower && c.size <= upper; });
}

inline Weight heaviest(const Partition& p) {
  Weight w = 0;
  for (const auto& c : p.clusters) w = std::max(w, c.weight);
  return w;
}

inline Weight lightest(const Partition& p) {
  Weight w = std::numeric_limits<Weight>::max();
  for (const auto& c : p.clusters) w = std::min(w, c.weight);
  return w;
}

}  // namespace detail

inline OracleAnswer oracle_decide(const PartitionCatalog& catalog, const ProblemParams& params) {
  const auto p = static_cast<std::size_t>(params.clusters);
  return detail::oracle_optimize(
      catalog,
      [&](const Partition& x) { return x.num_clusters() == p && detail::weights_within(x, params.lower, params.upper); },
      [](const Partition&) { return Weight{0}; }, true);
}

inline OracleAnswer oracle_min(const PartitionCatalog& catalog, Weight lower, Weight upper) {
  return detail::oracle_optimize(
      catalog, [&](const Partition& x) { return detail::weights_within(x, lower, upper); },
      [](const Partition& x) { return static_cast<Weight>(x.num_clusters()); }, true);
}

inline OracleAnswer oracle_max(const PartitionCatalog& catalog, Weight lower, Weight upper) {
  return detail::oracle_optimize(
      catalog, [&](const Partition& x) { return detail::weights_within(x, lower, upper); },
      [](const Partition& x) { return static_cast<Weight>(x.num_clusters()); }, false);
}

inline OracleAnswer oracle_min_cost(const PartitionCatalog& catalog, Weight lower, Weight upper,
                                    std::optional<std::int32_t> clusters = std::nullopt) {
  return detail::oracle_optimize(
      catalog,
      [&](const Partition& x) {
        if (clusters && x.num_clusters() != static_cast<std::size_t>(*clusters)) return false;
        return detail::weights_within(x, lower, upper);
      },
      [](const Partition& x) { return x.cost; }, true);
}

/// Cluster sizes in [l, u], exactly p clusters, heaviest cluster weight minimal.
inline OracleAnswer oracle_minmax(const PartitionCatalog& catalog, const ProblemParams& size_params) {
  const auto p = static_cast<std::size_t>(size_params.clusters);
  return detail::oracle_optimize(
      catalog,
      [&](const Partition& x) {
        return x.num_clusters() == p && detail::sizes_within(x, size_params.lower, size_params.upper);
      },
      detail::heaviest, true);
}

/// Cluster sizes in [l, u], exactly p clusters, lightest cluster weight maximal.
inline OracleAnswer oracle_maxmin(const PartitionCatalog& catalog, const ProblemParams& size_params) {
  const auto p = static_cast<std::size_t>(size_params.clusters);
  return detail::oracle_optimize(
      catalog,
      [&](const Partition& x) {
        return x.num_clusters() == p && detail::sizes_within(x, size_params.lower, size_params.upper);
      },
      detail::lightest, false);
}

inline OracleAnswer oracle_capacity(const PartitionCatalog& catalog, Weight lower_weight, Weight upper_weight,
                                    Weight upper_capacity, CountObjective objective) {
  return detail::oracle_optimize(
      catalog,
      [&](const Partition& x) {
        if (!detail::weights_within(x, lower_weight, upper_weight)) return false;
        return std::all_of(x.clusters.begin(), x.clusters.end(),
                           [&](const Cluster& c) { return c.capacity <= upper_capacity; });
      },
      [](const Partition& x) { return static_cast<Weight>(x.num_clusters()); }, objective == CountObjective::kMin);
}

}  // namespace cactus
