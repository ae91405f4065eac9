#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cactus/cactus.hpp"

namespace cactus::testing {

/// Graph from vertex weights and id pairs; ids are "a", "b", ... in order.
inline RawGraph raw(std::initializer_list<Weight> weights, std::initializer_list<std::pair<int, int>> edges) {
  RawGraph g;
  int i = 0;
  for (Weight w : weights) g.vertices.push_back({std::string(1, static_cast<char>('a' + i++)), w, std::nullopt});
  for (auto [u, v] : edges) {
    g.edges.push_back({g.vertices[u].id, g.vertices[v].id, std::nullopt, std::nullopt});
  }
  return g;
}

inline CactusGraph make(std::initializer_list<Weight> weights, std::initializer_list<std::pair<int, int>> edges) {
  return validate_cactus(raw(weights, edges));
}

inline CactusGraph triangle(Weight w = 1) { return make({w, w, w}, {{0, 1}, {1, 2}, {2, 0}}); }

inline CactusGraph path(std::initializer_list<Weight> weights) {
  RawGraph g = raw(weights, {});
  for (std::size_t i = 0; i + 1 < g.vertices.size(); ++i) {
    g.edges.push_back({g.vertices[i].id, g.vertices[i + 1].id, std::nullopt, std::nullopt});
  }
  return validate_cactus(g);
}

/// Random cactus of the small test corpus: n in [lo, hi], weights and
/// optional attributes in [0, 5].
inline CactusGraph random_small(std::uint64_t seed, std::size_t lo = 1, std::size_t hi = 10,
                                bool attributes = false) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 17);
  RandomCactusOptions o;
  o.vertices = lo + rng() % (hi - lo + 1);
  o.cycle_density = static_cast<double>(rng() % 5) / 4.0;
  o.weight = {0, 5};
  o.max_cycle_length = 3 + rng() % 5;
  o.seed = seed;
  if (attributes) {
    o.cost = AttributeRange{0, 5};
    o.capacity = AttributeRange{0, 5};
    o.size = AttributeRange{0, 5};
  }
  return validate_cactus(random_cactus(o));
}

/// Random (l, u, p) with 0 <= l <= u <= W and 1 <= p <= n.
inline ProblemParams random_params(const CactusGraph& g, std::mt19937_64& rng) {
  const Weight w = g.total_weight();
  const Weight l = static_cast<Weight>(rng() % static_cast<std::uint64_t>(w + 1));
  const Weight u = l + static_cast<Weight>(rng() % static_cast<std::uint64_t>(w - l + 1));
  const auto p = static_cast<std::int32_t>(1 + rng() % g.num_vertices());
  return {l, u, p};
}

inline std::vector<std::vector<std::string>> cluster_ids(const CactusGraph& g, const Partition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : p.clusters) {
    std::vector<std::string> ids;
    for (Vertex v : c.vertices) ids.push_back(g.id(v));
    out.push_back(ids);
  }
  return out;
}

}  // namespace cactus::testing
