#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cactus/graph.hpp"
#include "cactus/problem.hpp"

namespace cactus {

struct AttributeRange {
  Weight lo = 0;
  Weight hi = 0;
};

struct RandomCactusOptions {
  std::size_t vertices = 10;
  /// Probability that a growth step attaches a cycle rather than a pendant edge.
  double cycle_density = 0.3;
  AttributeRange weight{0, 10};
  std::size_t max_cycle_length = 6;
  std::optional<AttributeRange> cost;
  std::optional<AttributeRange> capacity;
  std::optional<AttributeRange> size;
  std::uint64_t seed = 1;
};

/// Grows a cactus from one vertex by repeatedly hanging either a pendant edge
/// or a fresh cycle off a random existing vertex. Vertex ids are shuffled so
/// the default root is not always the first vertex grown.
inline RawGraph random_cactus(const RandomCactusOptions& opt) {
  if (opt.vertices < 1) throw InvalidParams("random cactus needs at least one vertex");
  if (opt.cycle_density < 0.0 || opt.cycle_density > 1.0) throw InvalidParams("cycle density must lie in [0, 1]");
  auto bad_range = [](const std::optional<AttributeRange>& r) { return r && (r->lo < 0 || r->lo > r->hi); };
  if (bad_range(opt.weight) || bad_range(opt.cost) || bad_range(opt.capacity) || bad_range(opt.size)) {
    throw InvalidParams("attribute ranges must be non-negative and ordered");
  }
  if (opt.max_cycle_length < 3 && opt.cycle_density > 0.0) throw InvalidParams("cycles need length at least 3");

  std::mt19937_64 rng(opt.seed);
  auto pick = [&](AttributeRange r) { return std::uniform_int_distribution<Weight>(r.lo, r.hi)(rng); };
  auto below = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::bernoulli_distribution want_cycle(opt.cycle_density);

  const std::size_t n = opt.vertices;
  std::vector<std::pair<std::size_t, std::size_t>> links;
  std::size_t grown = 1;
  while (grown < n) {
    const std::size_t anchor = below(grown);
    const std::size_t room = n - grown;
    if (room >= 2 && opt.max_cycle_length >= 3 && want_cycle(rng)) {
      const std::size_t longest = std::min(opt.max_cycle_length, room + 1);
      const std::size_t len = 3 + below(longest - 2);
      std::size_t prev = anchor;
      for (std::size_t i = 1; i < len; ++i) {
        links.emplace_back(prev, grown);
        prev = grown++;
      }
      links.emplace_back(prev, anchor);
    } else {
      links.emplace_back(anchor, grown++);
    }
  }

  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), std::size_t{0});
  std::shuffle(label.begin(), label.end(), rng);

  RawGraph g;
  g.vertices.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.vertices[label[i]].id = "v" + std::to_string(label[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.vertices[i].weight = pick(opt.weight);
    if (opt.size) g.vertices[i].size = pick(*opt.size);
  }
  for (auto [a, b] : links) {
    RawEdge e;
    e.u = g.vertices[label[a]].id;
    e.v = g.vertices[label[b]].id;
    if (opt.cost) e.cost = pick(*opt.cost);
    if (opt.capacity) e.capacity = pick(*opt.capacity);
    g.edges.push_back(std::move(e));
  }
  return g;
}

}  // namespace cactus
