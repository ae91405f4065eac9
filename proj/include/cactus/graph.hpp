#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cactus {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::int64_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

enum class GraphErrorKind {
  kParse,
  kDuplicateId,
  kUnknownVertex,
  kEmpty,
  kNotConnected,
  kNotSimple,
  kNotCactus,
  kNegativeAttribute,
  kOverflow,
};

inline const char* to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::kParse: return "Parse";
    case GraphErrorKind::kDuplicateId: return "DuplicateId";
    case GraphErrorKind::kUnknownVertex: return "UnknownVertex";
    case GraphErrorKind::kEmpty: return "Empty";
    case GraphErrorKind::kNotConnected: return "NotConnected";
    case GraphErrorKind::kNotSimple: return "NotSimple";
    case GraphErrorKind::kNotCactus: return "NotCactus";
    case GraphErrorKind::kNegativeAttribute: return "NegativeAttribute";
    case GraphErrorKind::kOverflow: return "Overflow";
  }
  return "Unknown";
}

/// Raised by validation and parsing. `subject` names the offending vertex id
/// or edge ("u-v") when there is one.
class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, std::string subject, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        subject_(std::move(subject)) {}

  GraphErrorKind kind() const { return kind_; }
  const std::string& subject() const { return subject_; }

 private:
  GraphErrorKind kind_;
  std::string subject_;
};

/// Unvalidated input as read from a file. Attributes are signed so that
/// negative values can be reported instead of silently wrapping.
struct RawVertex {
  std::string id;
  std::int64_t weight = 0;
  std::optional<std::int64_t> size;
};

struct RawEdge {
  std::string u;
  std::string v;
  std::optional<std::int64_t> cost;
  std::optional<std::int64_t> capacity;
};

struct RawGraph {
  std::vector<RawVertex> vertices;
  std::vector<RawEdge> edges;
};

struct Edge {
  Vertex u;
  Vertex v;
  Weight cost = 0;
  Weight capacity = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
};

struct Neighbor {
  Vertex vertex;
  EdgeId edge;
};

/// Simple connected vertex-weighted graph in which every edge lies on at most
/// one simple cycle. Only `validate_cactus` constructs one; it is immutable
/// afterwards.
class CactusGraph {
 public:
  std::size_t num_vertices() const { return ids_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::string& id(Vertex v) const { return ids_[v]; }
  Weight weight(Vertex v) const { return weights_[v]; }
  Weight size(Vertex v) const { return sizes_[v]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Neighbor>& neighbors(Vertex v) const { return adjacency_[v]; }

  Weight total_weight() const { return total_weight_; }
  Weight total_size() const { return total_size_; }
  Weight max_weight() const { return max_weight_; }

  std::optional<Vertex> find_vertex(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
    const auto& small = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    Vertex target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
    for (const auto& nb : small) {
      if (nb.vertex == target) return nb.edge;
    }
    return std::nullopt;
  }

  /// Number of independent cycles (|E| - |V| + 1 for a connected graph).
  std::size_t num_cycles() const { return edges_.size() + 1 - ids_.size(); }

 private:
  friend CactusGraph validate_cactus(const RawGraph& raw);

  std::vector<std::string> ids_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Weight> weights_;
  std::vector<Weight> sizes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  Weight total_weight_ = 0;
  Weight total_size_ = 0;
  Weight max_weight_ = 0;
};

namespace detail {

inline std::string edge_name(const std::string& a, const std::string& b) { return a + "-" + b; }

inline Weight checked_add(Weight acc, Weight value, const std::string& what) {
  if (value > std::numeric_limits<Weight>::max() - acc) {
    throw GraphError(GraphErrorKind::kOverflow, what, "sum of " + what + " exceeds 64-bit range");
  }
  return acc + value;
}

}  // namespace detail

/// Checks the cactus invariants and builds the immutable graph. Missing
/// sizes default to the vertex weight; missing costs and capacities to 0.
inline CactusGraph validate_cactus(const RawGraph& raw) {
  CactusGraph g;
  const std::size_t n = raw.vertices.size();
  if (n == 0) throw GraphError(GraphErrorKind::kEmpty, "", "graph has no vertices");

  g.ids_.reserve(n);
  for (const auto& rv : raw.vertices) {
    if (rv.weight < 0) {
      throw GraphError(GraphErrorKind::kNegativeAttribute, rv.id, "vertex '" + rv.id + "' has negative weight");
    }
    if (rv.size && *rv.size < 0) {
      throw GraphError(GraphErrorKind::kNegativeAttribute, rv.id, "vertex '" + rv.id + "' has negative size");
    }
    if (!g.index_.emplace(rv.id, static_cast<Vertex>(g.ids_.size())).second) {
      throw GraphError(GraphErrorKind::kDuplicateId, rv.id, "vertex id '" + rv.id + "' appears twice");
    }
    g.ids_.push_back(rv.id);
    g.weights_.push_back(rv.weight);
    g.sizes_.push_back(rv.size.value_or(rv.weight));
    g.total_weight_ = detail::checked_add(g.total_weight_, rv.weight, "weights");
    g.total_size_ = detail::checked_add(g.total_size_, g.sizes_.back(), "sizes");
    g.max_weight_ = std::max(g.max_weight_, rv.weight);
  }

  g.adjacency_.assign(n, {});
  Weight total_cost = 0;
  Weight total_capacity = 0;
  for (const auto& re : raw.edges) {
    const std::string name = detail::edge_name(re.u, re.v);
    auto iu = g.index_.find(re.u);
    auto iv = g.index_.find(re.v);
    if (iu == g.index_.end() || iv == g.index_.end()) {
      throw GraphError(GraphErrorKind::kUnknownVertex, name, "edge " + name + " references an unknown vertex");
    }
    if (iu->second == iv->second) {
      throw GraphError(GraphErrorKind::kNotSimple, name, "self-loop at '" + re.u + "'");
    }
    if (g.find_edge(iu->second, iv->second)) {
      throw GraphError(GraphErrorKind::kNotSimple, name, "parallel edge " + name);
    }
    Edge e{iu->second, iv->second, re.cost.value_or(0), re.capacity.value_or(0)};
    if (e.cost < 0 || e.capacity < 0) {
      throw GraphError(GraphErrorKind::kNegativeAttribute, name, "edge " + name + " has a negative attribute");
    }
    total_cost = detail::checked_add(total_cost, e.cost, "costs");
    total_capacity = detail::checked_add(total_capacity, e.capacity, "capacities");
    const auto id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back(e);
    g.adjacency_[e.u].push_back({e.v, id});
    g.adjacency_[e.v].push_back({e.u, id});
  }

  // Iterative DFS: connectivity, then every back edge claims the tree edges
  // of its fundamental cycle. A tree edge claimed twice lies on two cycles.
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<EdgeId> parent_edge(n, kNoEdge);
  std::vector<std::uint32_t> depth(n, 0);
  std::vector<std::uint8_t> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> cursor(n, 0);
  std::vector<std::uint8_t> claimed(g.edges_.size(), 0);
  std::vector<Vertex> stack{0};
  state[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    if (cursor[v] == g.adjacency_[v].size()) {
      state[v] = 2;
      stack.pop_back();
      continue;
    }
    const Neighbor nb = g.adjacency_[v][cursor[v]++];
    if (nb.edge == parent_edge[v]) continue;
    if (state[nb.vertex] == 0) {
      parent[nb.vertex] = v;
      parent_edge[nb.vertex] = nb.edge;
      depth[nb.vertex] = depth[v] + 1;
      state[nb.vertex] = 1;
      ++visited;
      stack.push_back(nb.vertex);
    } else if (state[nb.vertex] == 1) {
      // Back edge v -> ancestor.
      claimed[nb.edge] = 1;
      for (Vertex x = v; x != nb.vertex; x = parent[x]) {
        if (claimed[parent_edge[x]]) {
          const Edge& bad = g.edges_[parent_edge[x]];
          const std::string name = detail::edge_name(g.ids_[bad.u], g.ids_[bad.v]);
          throw GraphError(GraphErrorKind::kNotCactus, name, "edge " + name + " lies on more than one cycle");
        }
        claimed[parent_edge[x]] = 1;
      }
    }
  }
  if (visited != n) {
    auto it = std::find(state.begin(), state.end(), std::uint8_t{0});
    const std::string& lonely = g.ids_[static_cast<std::size_t>(it - state.begin())];
    throw GraphError(GraphErrorKind::kNotConnected, lonely, "vertex '" + lonely + "' is unreachable");
  }
  return g;
}

struct Cluster {
  std::vector<Vertex> vertices;  // ascending
  Weight weight = 0;
  Weight size = 0;
  Weight capacity = 0;  // sum of capacities of edges leaving the cluster
};

/// A partition given by its cut edges. `clusters` are the connected
/// components of the graph minus the cut, ordered by their smallest vertex.
struct Partition {
  std::vector<EdgeId> cut_edges;  // ascending, inter-cluster only
  std::vector<Cluster> clusters;
  std::vector<std::uint32_t> cluster_of;
  Weight cost = 0;  // sum of costs of cut edges

  std::size_t num_clusters() const { return clusters.size(); }
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace detail

/// Builds the clusters left after deleting `cut` and strips cut edges whose
/// endpoints ended up in the same cluster (possible for cycle edges).
inline Partition canonicalize_partition(const CactusGraph& g, const std::vector<EdgeId>& cut) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> is_cut(g.num_edges(), 0);
  for (EdgeId e : cut) is_cut.at(e) = 1;

  detail::DisjointSets sets(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!is_cut[e]) sets.unite(g.edge(e).u, g.edge(e).v);
  }

  Partition p;
  p.cluster_of.assign(n, 0);
  std::vector<std::uint32_t> label(n, std::numeric_limits<std::uint32_t>::max());
  for (Vertex v = 0; v < n; ++v) {
    const std::uint32_t root = sets.find(v);
    if (label[root] == std::numeric_limits<std::uint32_t>::max()) {
      label[root] = static_cast<std::uint32_t>(p.clusters.size());
      p.clusters.emplace_back();
    }
    Cluster& c = p.clusters[label[root]];
    c.vertices.push_back(v);
    c.weight += g.weight(v);
    c.size += g.size(v);
    p.cluster_of[v] = label[root];
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    const auto cu = p.cluster_of[edge.u];
    const auto cv = p.cluster_of[edge.v];
    if (cu == cv) continue;
    p.cut_edges.push_back(e);
    p.cost += edge.cost;
    p.clusters[cu].capacity += edge.capacity;
    p.clusters[cv].capacity += edge.capacity;
  }
  return p;
}

}  // namespace cactus
