#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cactus/graph.hpp"

namespace cactus {

using CycleId = std::uint32_t;
inline constexpr CycleId kNoCycle = std::numeric_limits<CycleId>::max();

struct Child {
  Vertex vertex;
  EdgeId edge;  // tree edge to the parent
};

/// One cycle of the graph seen as a descending tree path
/// start = path[0] -> ... -> path[m-1] = end, closed by a non-tree edge.
struct CycleRecord {
  std::vector<Vertex> path;
  std::vector<EdgeId> path_edges;  // path_edges[i] joins path[i] and path[i+1]
  EdgeId closing_edge = kNoEdge;   // joins end and start
  std::size_t child_index_at_start = 0;

  Vertex start() const { return path.front(); }
  Vertex end() const { return path.back(); }
  std::size_t length() const { return path.size(); }

  /// Edge joining path[i] and path[(i + 1) % m].
  EdgeId ring_edge(std::size_t i) const { return i + 1 < path.size() ? path_edges[i] : closing_edge; }
};

/// A re-hanging of one cycle node: `moved` changes parent from
/// `old_parent` to `new_parent`.
struct ConfigurationChange {
  Vertex moved = kNoVertex;
  Vertex old_parent = kNoVertex;
  Vertex new_parent = kNoVertex;
  EdgeId removed_edge = kNoEdge;
  EdgeId added_edge = kNoEdge;
};

/// Tree edits that turn configuration j-1 into configuration j of `cycle`.
/// Configuration 1 is the DFS tree itself, so it has no change.
inline std::optional<ConfigurationChange> configuration_edges(const CycleRecord& cycle, std::size_t j) {
  const std::size_t m = cycle.length();
  if (j < 1 || j > m - 1) {
    throw std::out_of_range("configuration index " + std::to_string(j) + " outside [1, " + std::to_string(m - 1) + "]");
  }
  if (j == 1) return std::nullopt;
  auto node = [&](std::size_t i) { return cycle.path[i % m]; };
  ConfigurationChange change;
  change.moved = node(m - j + 1);
  change.old_parent = node(m - j);
  change.new_parent = node(m - j + 2);
  change.removed_edge = cycle.ring_edge(m - j);
  change.added_edge = cycle.ring_edge((m - j + 1) % m);
  return change;
}

/// Edge absent from the tree of configuration j: it joins path[m-j] and
/// path[(m-j+1) mod m]. Valid for 1 <= j <= m.
inline EdgeId removed_edge(const CycleRecord& cycle, std::size_t j) { return cycle.ring_edge(cycle.length() - j); }

/// Rooted DFS tree of a cactus graph with every cycle recorded as a path.
/// Children keep adjacency order except that the on-cycle child of an
/// interior cycle node is moved to the back.
class CactusTree {
 public:
  Vertex root() const { return root_; }
  std::size_t num_vertices() const { return parent_.size(); }
  Vertex parent(Vertex v) const { return parent_[v]; }
  EdgeId parent_edge(Vertex v) const { return parent_edge_[v]; }
  const std::vector<Child>& children(Vertex v) const { return children_[v]; }
  const std::vector<CycleRecord>& cycles() const { return cycles_; }
  const CycleRecord& cycle(CycleId c) const { return cycles_[c]; }

  /// Post-order (children before parents).
  const std::vector<Vertex>& bottom_up() const { return bottom_up_; }

  /// The unique cycle containing v as a non-start node, or kNoCycle.
  CycleId member_cycle(Vertex v) const { return member_cycle_[v]; }
  /// Index of v on the path of member_cycle(v).
  std::size_t member_position(Vertex v) const { return member_position_[v]; }

  /// v lies strictly inside the path of its member cycle, so its last child
  /// continues that cycle.
  bool is_interior(Vertex v) const {
    const CycleId c = member_cycle_[v];
    return c != kNoCycle && member_position_[v] + 1 < cycles_[c].length();
  }

  /// Cycle whose start is v and whose first path node is the i-th child.
  CycleId cycle_at_child(Vertex v, std::size_t i) const { return cycle_at_child_[v][i]; }

  std::size_t max_cycle_length() const {
    std::size_t best = 0;
    for (const auto& c : cycles_) best = std::max(best, c.length());
    return best;
  }

 private:
  friend CactusTree build_tree(const CactusGraph& g, Vertex root);

  Vertex root_ = 0;
  std::vector<Vertex> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::vector<Child>> children_;
  std::vector<CycleRecord> cycles_;
  std::vector<Vertex> bottom_up_;
  std::vector<CycleId> member_cycle_;
  std::vector<std::size_t> member_position_;
  std::vector<std::vector<CycleId>> cycle_at_child_;
};

inline CactusTree build_tree(const CactusGraph& g, Vertex root) {
  const std::size_t n = g.num_vertices();
  if (root >= n) throw std::out_of_range("root vertex out of range");

  CactusTree t;
  t.root_ = root;
  t.parent_.assign(n, kNoVertex);
  t.parent_edge_.assign(n, kNoEdge);
  t.children_.assign(n, {});
  t.member_cycle_.assign(n, kNoCycle);
  t.member_position_.assign(n, 0);

  std::vector<std::uint8_t> state(n, 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Vertex> stack{root};
  std::vector<Vertex> preorder{root};
  state[root] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    if (cursor[v] == g.neighbors(v).size()) {
      state[v] = 2;
      stack.pop_back();
      continue;
    }
    const Neighbor nb = g.neighbors(v)[cursor[v]++];
    if (nb.edge == t.parent_edge_[v]) continue;
    if (state[nb.vertex] == 0) {
      t.parent_[nb.vertex] = v;
      t.parent_edge_[nb.vertex] = nb.edge;
      t.children_[v].push_back({nb.vertex, nb.edge});
      state[nb.vertex] = 1;
      preorder.push_back(nb.vertex);
      stack.push_back(nb.vertex);
    } else if (state[nb.vertex] == 1) {
      CycleRecord rec;
      for (Vertex x = v; x != nb.vertex; x = t.parent_[x]) {
        rec.path.push_back(x);
        rec.path_edges.push_back(t.parent_edge_[x]);
      }
      rec.path.push_back(nb.vertex);
      std::reverse(rec.path.begin(), rec.path.end());
      std::reverse(rec.path_edges.begin(), rec.path_edges.end());
      rec.closing_edge = nb.edge;
      t.cycles_.push_back(std::move(rec));
    }
  }
  if (preorder.size() != n) throw std::logic_error("build_tree: graph is not connected");

  for (CycleId c = 0; c < t.cycles_.size(); ++c) {
    const auto& path = t.cycles_[c].path;
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (t.member_cycle_[path[i]] != kNoCycle) throw std::logic_error("build_tree: vertex is a non-start node of two cycles");
      t.member_cycle_[path[i]] = c;
      t.member_position_[path[i]] = i;
    }
    // The on-cycle child of an interior node goes last.
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      auto& kids = t.children_[path[i]];
      auto it = std::find_if(kids.begin(), kids.end(), [&](const Child& ch) { return ch.vertex == path[i + 1]; });
      std::rotate(it, it + 1, kids.end());
    }
  }

  t.cycle_at_child_.resize(n);
  for (Vertex v = 0; v < n; ++v) t.cycle_at_child_[v].assign(t.children_[v].size(), kNoCycle);
  for (CycleId c = 0; c < t.cycles_.size(); ++c) {
    auto& rec = t.cycles_[c];
    const auto& kids = t.children_[rec.start()];
    auto it = std::find_if(kids.begin(), kids.end(), [&](const Child& ch) { return ch.vertex == rec.path[1]; });
    rec.child_index_at_start = static_cast<std::size_t>(it - kids.begin());
    t.cycle_at_child_[rec.start()][rec.child_index_at_start] = c;
  }

  t.bottom_up_.assign(preorder.rbegin(), preorder.rend());
  return t;
}

/// Smallest vertex id in lexicographic order.
inline Vertex default_root(const CactusGraph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.num_vertices(); ++v) {
    if (g.id(v) < g.id(best)) best = v;
  }
  return best;
}

inline CactusTree build_tree(const CactusGraph& g) { return build_tree(g, default_root(g)); }

}  // namespace cactus
