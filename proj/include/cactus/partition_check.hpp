#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cactus/graph.hpp"

namespace cactus {

/// Constraints a finished partition can be checked against. Bounds apply to
/// cluster weight, or to cluster size when `by_size` is set.
struct ClusterBounds {
  Weight lower = 0;
  Weight upper = std::numeric_limits<Weight>::max();
  bool by_size = false;
  std::optional<std::size_t> count;
  std::optional<Weight> max_weight;
  std::optional<Weight> min_weight;
  std::optional<Weight> max_capacity;
};

/// Recomputes the partition's structure from scratch: clusters are disjoint,
/// cover V, each is connected, the cut is exactly the inter-cluster edge set,
/// and the stored aggregates match. Returns a description of the first
/// problem found.
inline std::optional<std::string> structural_violation(const CactusGraph& g, const Partition& p) {
  const std::size_t n = g.num_vertices();
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> owner(n, kUnset);
  for (std::uint32_t c = 0; c < p.clusters.size(); ++c) {
    if (p.clusters[c].vertices.empty()) return "cluster " + std::to_string(c) + " is empty";
    for (Vertex v : p.clusters[c].vertices) {
      if (v >= n) return "cluster " + std::to_string(c) + " has an unknown vertex";
      if (owner[v] != kUnset) return "vertex '" + g.id(v) + "' is in two clusters";
      owner[v] = c;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (owner[v] == kUnset) return "vertex '" + g.id(v) + "' is in no cluster";
  }
  for (std::uint32_t c = 0; c < p.clusters.size(); ++c) {
    const auto& members = p.clusters[c].vertices;
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<Vertex> stack{members.front()};
    seen[members.front()] = 1;
    std::size_t reached = 1;
    Weight weight = 0;
    Weight size = 0;
    Weight capacity = 0;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(v)) {
        if (owner[nb.vertex] == c && !seen[nb.vertex]) {
          seen[nb.vertex] = 1;
          ++reached;
          stack.push_back(nb.vertex);
        }
      }
    }
    if (reached != members.size()) return "cluster " + std::to_string(c) + " is not connected";
    for (Vertex v : members) {
      weight += g.weight(v);
      size += g.size(v);
      for (const auto& nb : g.neighbors(v)) {
        if (owner[nb.vertex] != c) capacity += g.edge(nb.edge).capacity;
      }
    }
    const auto& cl = p.clusters[c];
    if (cl.weight != weight || cl.size != size || cl.capacity != capacity) {
      return "cluster " + std::to_string(c) + " has stale aggregates";
    }
  }
  std::vector<EdgeId> expected;
  Weight cost = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (owner[g.edge(e).u] != owner[g.edge(e).v]) {
      expected.push_back(e);
      cost += g.edge(e).cost;
    }
  }
  if (expected != p.cut_edges) return "cut edges are not exactly the inter-cluster edges";
  if (cost != p.cost) return "partition cost is stale";
  return std::nullopt;
}

/// Structural check plus the problem constraints in `bounds`.
inline std::optional<std::string> constraint_violation(const CactusGraph& g, const Partition& p,
                                                       const ClusterBounds& bounds) {
  if (auto bad = structural_violation(g, p)) return bad;
  if (bounds.count && p.num_clusters() != *bounds.count) {
    return "expected " + std::to_string(*bounds.count) + " clusters, got " + std::to_string(p.num_clusters());
  }
  for (std::size_t c = 0; c < p.clusters.size(); ++c) {
    const auto& cl = p.clusters[c];
    const Weight measure = bounds.by_size ? cl.size : cl.weight;
    const std::string name = "cluster " + std::to_string(c);
    if (measure < bounds.lower || measure > bounds.upper) return name + " violates the [l, u] bounds";
    if (bounds.max_weight && cl.weight > *bounds.max_weight) return name + " is heavier than allowed";
    if (bounds.min_weight && cl.weight < *bounds.min_weight) return name + " is lighter than allowed";
    if (bounds.max_capacity && cl.capacity > *bounds.max_capacity) return name + " exceeds the capacity bound";
  }
  return std::nullopt;
}

inline bool satisfies(const CactusGraph& g, const Partition& p, const ClusterBounds& bounds) {
  return !constraint_violation(g, p, bounds).has_value();
}

}  // namespace cactus
