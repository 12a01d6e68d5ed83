#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "copsrobber/errors.hpp"

namespace copsrobber {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
/// Bitmask over vertex ids; only valid for graphs with at most 64 vertices.
using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;

/// Exhaustive-search limits and the game-solver state budget.
struct Limits {
  int domination = 24;
  int treewidth = 18;
  int helicopter = 10;
  int wideness = 16;
  std::uint64_t state_budget = 50'000'000;
};

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask low_bits(int n) { return n >= kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1; }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    const int v = std::countr_zero(m);
    f(static_cast<Vertex>(v));
    m &= m - 1;
  }
}

/// Sorted set of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : members_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) { normalize(); }

  static VertexSet from_mask(Mask m) {
    VertexSet s;
    for_each_bit(m, [&](Vertex v) { s.members_.push_back(v); });
    return s;
  }

  Mask to_mask() const {
    Mask m = 0;
    for (Vertex v : members_) {
      if (v >= kMaskBits) throw CapabilityError("vertex id exceeds bitmask width");
      m |= bit(v);
    }
    return m;
  }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const { return members_; }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<Vertex> members_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  Graph(int vertex_count, std::vector<Edge> edge_list) : n_(checked_count(vertex_count)), adj_(n_) {
    for (auto& [u, v] : edge_list) {
      if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                         std::to_string(n_));
      }
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end()) {
      auto dup = *std::adjacent_find(edge_list.begin(), edge_list.end());
      throw InputError("duplicate edge (" + std::to_string(dup.first) + "," + std::to_string(dup.second) + ")");
    }
    edges_ = std::move(edge_list);
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    if (n_ <= kMaskBits) {
      closed_masks_.resize(n_);
      for (Vertex v = 0; v < n_; ++v) {
        Mask m = bit(v);
        for (Vertex u : adj_[v]) m |= bit(u);
        closed_masks_[v] = m;
      }
    }
  }

  /// Builds a graph from an edge list that may contain duplicates (dropped) but no loops.
  static Graph from_edges_dedup(int vertex_count, std::vector<Edge> edge_list) {
    for (auto& [u, v] : edge_list)
      if (u > v) std::swap(u, v);
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    return Graph(vertex_count, std::move(edge_list));
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  int max_degree() const {
    int d = 0;
    for (const auto& list : adj_) d = std::max(d, static_cast<int>(list.size()));
    return d;
  }

  int min_degree() const {
    if (n_ == 0) return 0;
    int d = std::numeric_limits<int>::max();
    for (const auto& list : adj_) d = std::min(d, static_cast<int>(list.size()));
    return d;
  }

  bool fits_mask() const { return n_ <= kMaskBits; }

  /// Closed neighbourhood of v as a bitmask.
  Mask closed_mask(Vertex v) const {
    require_mask();
    return closed_masks_[v];
  }

  Mask all_mask() const {
    require_mask();
    return low_bits(n_);
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }

  void check_set(const VertexSet& s) const {
    for (Vertex v : s) check_vertex(v);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  static int checked_count(int n) {
    if (n < 0) throw InputError("negative vertex count");
    return n;
  }

  void require_mask() const {
    if (n_ > kMaskBits) throw CapabilityError("bitmask operations need at most 64 vertices");
  }

  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<Mask> closed_masks_;
};

/// Subgraph induced by `keep`; vertex i of the result is keep[i].
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  g.check_set(keep);
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  return Graph(static_cast<int>(keep.size()), std::move(edges));
}

inline Mask closed_neighborhood_mask(const Graph& g, Mask a) {
  Mask out = 0;
  for_each_bit(a, [&](Vertex v) { out |= g.closed_mask(v); });
  return out;
}

/// A ∪ N(A).
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& a) {
  g.check_set(a);
  std::vector<Vertex> out(a.begin(), a.end());
  for (Vertex v : a)
    for (Vertex u : g.neighbors(v)) out.push_back(u);
  return VertexSet(std::move(out));
}

inline bool is_dominating(const Graph& g, const VertexSet& a) {
  return closed_neighborhood(g, a).size() == static_cast<std::size_t>(g.vertex_count());
}

namespace detail {

// Depth-limited branching: the lowest uncovered target vertex must be covered by
// some member of its closed neighbourhood among the candidates.
inline bool dominate_within(const Graph& g, Mask target, Mask covered, Mask candidates, int budget, Mask& chosen) {
  const Mask uncovered = target & ~covered;
  if (uncovered == 0) return true;
  if (budget == 0) return false;
  const Vertex u = std::countr_zero(uncovered);
  Mask options = g.closed_mask(u) & candidates;
  while (options != 0) {
    const Vertex w = std::countr_zero(options);
    options &= options - 1;
    chosen |= bit(w);
    if (dominate_within(g, target, covered | g.closed_mask(w), candidates, budget - 1, chosen)) return true;
    chosen &= ~bit(w);
  }
  return false;
}

}  // namespace detail

/// Smallest S ⊆ candidates with target ⊆ N̄(S), searched by increasing size. Empty optional
/// when the candidates cannot dominate the target.
inline std::optional<Mask> minimum_dominating_mask(const Graph& g, Mask target, Mask candidates, int max_size = 64) {
  if ((closed_neighborhood_mask(g, candidates) & target) != target) return std::nullopt;
  for (int size = 0; size <= max_size; ++size) {
    Mask chosen = 0;
    if (detail::dominate_within(g, target, 0, candidates, size, chosen)) return chosen;
  }
  return std::nullopt;
}

inline VertexSet minimum_dominating_set(const Graph& g, const Limits& limits = {}) {
  if (g.vertex_count() > limits.domination) {
    throw CapabilityError("domination_number_exact: n=" + std::to_string(g.vertex_count()) + " exceeds limit " +
                          std::to_string(limits.domination));
  }
  if (g.vertex_count() == 0) return {};
  return VertexSet::from_mask(*minimum_dominating_mask(g, g.all_mask(), g.all_mask()));
}

inline int domination_number_exact(const Graph& g, const Limits& limits = {}) {
  return static_cast<int>(minimum_dominating_set(g, limits).size());
}

/// Components of g − removed, each sorted, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed = {}) {
  g.check_set(removed);
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (Vertex v : removed) seen[v] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.vertex_count() > 0 && connected_components(g).size() == 1; }

/// Connected component of `start` in the subgraph induced by `allowed` (bitmask form).
inline Mask component_mask(const Graph& g, Vertex start, Mask allowed) {
  Mask comp = bit(start) & allowed;
  Mask frontier = comp;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](Vertex v) { next |= g.closed_mask(v); });
    next &= allowed & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

/// BFS distances from `source` in g − blocked; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source, const std::vector<char>& blocked = {}) {
  std::vector<int> dist(g.vertex_count(), -1);
  if (!blocked.empty() && blocked[source]) return dist;
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] < 0 && (blocked.empty() || !blocked[u])) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

namespace detail {

// Max number of internally vertex-disjoint s-t paths, stopping early at `cap`.
inline int vertex_disjoint_paths(const Graph& g, Vertex s, Vertex t, int cap) {
  const int n = g.vertex_count();
  const int nodes = 2 * n;  // v_in = 2v, v_out = 2v+1
  std::vector<std::vector<int>> residual(nodes, std::vector<int>(nodes, 0));
  const int inf = n + 1;
  for (Vertex v = 0; v < n; ++v) residual[2 * v][2 * v + 1] = (v == s || v == t) ? inf : 1;
  for (auto [u, v] : g.edges()) {
    residual[2 * u + 1][2 * v] = inf;
    residual[2 * v + 1][2 * u] = inf;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(nodes);
  while (flow < cap) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[sink] < 0) {
      const int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < nodes; ++y) {
        if (parent[y] < 0 && residual[x][y] > 0) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    if (parent[sink] < 0) break;
    for (int y = sink; y != source; y = parent[y]) {
      residual[parent[y]][y] -= 1;
      residual[y][parent[y]] += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

/// Minimum number of vertices whose removal disconnects g or leaves one vertex.
/// Complete graphs return n−1; disconnected graphs return 0. Computations stop
/// early once the answer is known to be at least `cap`.
inline int vertex_connectivity(const Graph& g, int cap = std::numeric_limits<int>::max()) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  int best = std::min(n - 1, cap);
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, detail::vertex_disjoint_paths(g, s, t, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

/// k-connectivity with the convention κ(K_m) = m−1; every connected nonempty graph is 1-connected.
inline bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  return vertex_connectivity(g, k) >= k;
}

/// Identify the endpoints of e; the merged vertex takes the smaller id and later ids shift down.
inline Graph contract_edge(const Graph& g, Edge e) {
  auto [a, b] = e;
  g.check_vertex(a);
  g.check_vertex(b);
  if (!g.adjacent(a, b)) {
    throw InputError("contract_edge: (" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
  }
  if (a > b) std::swap(a, b);
  auto relabel = [&](Vertex v) { return v == b ? a : (v > b ? v - 1 : v); };
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    const Vertex x = relabel(u);
    const Vertex y = relabel(v);
    if (x != y) edges.emplace_back(x, y);
  }
  return Graph::from_edges_dedup(g.vertex_count() - 1, std::move(edges));
}

}  // namespace copsrobber
