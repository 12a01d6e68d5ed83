#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "copsrobber/errors.hpp"
#include "copsrobber/graph.hpp"

namespace copsrobber {

/// Permutation of vertex ids; earlier vertices are eliminated first.
struct EliminationOrder {
  std::vector<Vertex> order;

  bool is_permutation_of(int n) const {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (Vertex v : order) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  std::vector<int> positions() const {
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    return pos;
  }
};

struct TreeDecomposition {
  Graph tree;
  std::vector<VertexSet> bags;

  int node_count() const { return tree.vertex_count(); }

  int width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
  }
};

namespace detail {

inline bool is_tree(const Graph& t) {
  if (t.vertex_count() == 0) return true;
  return is_connected(t) && t.edge_count() + 1 == static_cast<std::size_t>(t.vertex_count());
}

// Nodes of the component of T − (a,b) that contains `a`.
inline std::vector<char> side_of_tree_edge(const Graph& t, Vertex a, Vertex b) {
  std::vector<char> side(t.vertex_count(), 0);
  std::vector<Vertex> stack{a};
  side[a] = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : t.neighbors(x)) {
      if (side[y] || (x == a && y == b)) continue;
      side[y] = 1;
      stack.push_back(y);
    }
  }
  return side;
}

}  // namespace detail

/// Coverage of vertices and edges plus the connected-subtree condition.
inline bool validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int n = g.vertex_count();
  if (static_cast<int>(td.bags.size()) != td.tree.vertex_count()) return false;
  if (!detail::is_tree(td.tree)) return false;
  if (n > 0 && td.tree.vertex_count() == 0) return false;

  std::vector<std::vector<Vertex>> nodes_of(n);
  for (int t = 0; t < td.node_count(); ++t) {
    for (Vertex v : td.bags[t]) {
      if (v < 0 || v >= n) return false;
      nodes_of[v].push_back(t);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (nodes_of[v].empty()) return false;

  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int t : nodes_of[u]) covered = covered || td.bags[t].contains(v);
    if (!covered) return false;
  }

  // {t : v ∈ W_t} must induce a connected subtree.
  std::vector<char> member(td.node_count(), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (int t : nodes_of[v]) member[t] = 1;
    std::vector<Vertex> stack{nodes_of[v].front()};
    std::vector<char> seen(td.node_count(), 0);
    seen[nodes_of[v].front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      ++reached;
      for (Vertex y : td.tree.neighbors(x)) {
        if (member[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    for (int t : nodes_of[v]) member[t] = 0;
    if (reached != nodes_of[v].size()) return false;
  }
  return true;
}

/// Separator check on every tree edge t1t2: with X = W_t1 ∩ W_t2 and U_i the union of bags on
/// each side, there is no edge of g between U_1∖X and U_2∖X.
inline bool check_separators(const Graph& g, const TreeDecomposition& td) {
  const int n = g.vertex_count();
  for (auto [a, b] : td.tree.edges()) {
    const auto side = detail::side_of_tree_edge(td.tree, a, b);
    const VertexSet x = set_intersection(td.bags[a], td.bags[b]);
    std::vector<char> in_u1(n, 0), in_u2(n, 0);
    for (int t = 0; t < td.node_count(); ++t) {
      for (Vertex v : td.bags[t]) (side[t] ? in_u1 : in_u2)[v] = 1;
    }
    for (Vertex v : x) in_u1[v] = in_u2[v] = 0;
    for (auto [u, v] : g.edges()) {
      if ((in_u1[u] && in_u2[v]) || (in_u2[u] && in_u1[v])) return false;
    }
  }
  return true;
}

/// Decomposition induced by eliminating vertices in `order`: node i carries the bag of the
/// i-th eliminated vertex and hangs below the earliest-eliminated vertex of its higher
/// neighbourhood in the fill-in graph. Roots of separate components are chained.
inline TreeDecomposition decomposition_from_elimination_order(const Graph& g, const EliminationOrder& elim) {
  const int n = g.vertex_count();
  if (!elim.is_permutation_of(n)) throw InputError("elimination order is not a permutation of the vertices");
  const auto pos = elim.positions();
  std::vector<std::vector<char>> fill(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) fill[u][v] = fill[v][u] = 1;

  std::vector<VertexSet> bags(n);
  std::vector<Edge> tree_edges;
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    const Vertex v = elim.order[i];
    std::vector<Vertex> higher;
    for (Vertex u = 0; u < n; ++u)
      if (fill[v][u] && pos[u] > i) higher.push_back(u);
    for (std::size_t a = 0; a < higher.size(); ++a)
      for (std::size_t b = a + 1; b < higher.size(); ++b) fill[higher[a]][higher[b]] = fill[higher[b]][higher[a]] = 1;
    std::vector<Vertex> bag = higher;
    bag.push_back(v);
    bags[i] = VertexSet(std::move(bag));
    if (higher.empty()) {
      if (previous_root >= 0) tree_edges.emplace_back(previous_root, i);
      previous_root = i;
    } else {
      Vertex parent = higher.front();
      for (Vertex u : higher)
        if (pos[u] < pos[parent]) parent = u;
      tree_edges.emplace_back(i, pos[parent]);
    }
  }
  return TreeDecomposition{Graph(n, std::move(tree_edges)), std::move(bags)};
}

/// Contracts tree edges whose bags are nested until all bags are pairwise incomparable.
inline TreeDecomposition reduce_nested_bags(const TreeDecomposition& td) {
  const int nodes = td.node_count();
  std::vector<std::vector<char>> adj(nodes, std::vector<char>(nodes, 0));
  for (auto [a, b] : td.tree.edges()) adj[a][b] = adj[b][a] = 1;
  std::vector<char> alive(nodes, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < nodes && !changed; ++a) {
      if (!alive[a]) continue;
      for (int b = 0; b < nodes && !changed; ++b) {
        if (!alive[b] || !adj[a][b] || !td.bags[a].is_subset_of(td.bags[b])) continue;
        // merge a into b
        for (int c = 0; c < nodes; ++c) {
          if (adj[a][c] && c != b) adj[b][c] = adj[c][b] = 1;
          adj[a][c] = adj[c][a] = 0;
        }
        alive[a] = 0;
        changed = true;
      }
    }
  }
  std::vector<int> index(nodes, -1);
  std::vector<VertexSet> bags;
  for (int t = 0; t < nodes; ++t) {
    if (!alive[t]) continue;
    index[t] = static_cast<int>(bags.size());
    bags.push_back(td.bags[t]);
  }
  std::vector<Edge> edges;
  for (int a = 0; a < nodes; ++a)
    for (int b = a + 1; b < nodes; ++b)
      if (alive[a] && alive[b] && adj[a][b]) edges.emplace_back(index[a], index[b]);
  return TreeDecomposition{Graph(static_cast<int>(bags.size()), std::move(edges)), std::move(bags)};
}

/// Maximum-cardinality search, ties broken by smallest id. Returns the visit order.
inline std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
    numbered[best] = 1;
    visit.push_back(best);
    for (Vertex u : g.neighbors(best))
      if (!numbered[u]) ++weight[u];
  }
  return visit;
}

/// True iff each vertex's later neighbours form a clique.
inline bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& elim) {
  const int n = g.vertex_count();
  if (!elim.is_permutation_of(n)) return false;
  const auto pos = elim.positions();
  for (Vertex v = 0; v < n; ++v) {
    Vertex first_later = -1;
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v] && (first_later < 0 || pos[u] < pos[first_later])) first_later = u;
    if (first_later < 0) continue;
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v] && u != first_later && !g.adjacent(u, first_later)) return false;
  }
  return true;
}

struct ChordalityResult {
  bool chordal = false;
  std::optional<EliminationOrder> peo;
};

inline ChordalityResult is_chordal(const Graph& g) {
  auto visit = maximum_cardinality_search(g);
  EliminationOrder peo{std::vector<Vertex>(visit.rbegin(), visit.rend())};
  if (is_perfect_elimination_order(g, peo)) return {true, std::move(peo)};
  return {false, std::nullopt};
}

/// Clique tree of a chordal graph: a decomposition whose bags are exactly its maximal cliques.
inline TreeDecomposition clique_tree_decomposition(const Graph& g, const EliminationOrder& peo) {
  if (!is_perfect_elimination_order(g, peo)) throw InputError("clique_tree_decomposition: not a perfect elimination order");
  return reduce_nested_bags(decomposition_from_elimination_order(g, peo));
}

struct TreewidthResult {
  int treewidth = -1;
  TreeDecomposition decomposition;
  EliminationOrder order;
};

namespace detail {

// Vertices outside S ∪ {v} reachable from v through S: v's higher neighbourhood after
// eliminating S first.
inline Mask elimination_frontier(const Graph& g, Mask eliminated, Vertex v) {
  const Mask inside = component_mask(g, v, eliminated | bit(v));
  return closed_neighborhood_mask(g, inside) & ~inside & ~eliminated;
}

inline int degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  int best = 0;
  for (int step = 0; step < n; ++step) {
    Vertex v = -1;
    for (Vertex u = 0; u < n; ++u)
      if (!removed[u] && (v < 0 || deg[u] < deg[v])) v = u;
    best = std::max(best, deg[v]);
    removed[v] = 1;
    for (Vertex u : g.neighbors(v))
      if (!removed[u]) --deg[u];
  }
  return best;
}

// Breadth-first search over eliminated prefixes whose frontiers never exceed k.
inline std::optional<EliminationOrder> elimination_order_of_width(const Graph& g, int k) {
  const int n = g.vertex_count();
  const Mask all = g.all_mask();
  std::unordered_map<Mask, std::pair<Mask, Vertex>> parent;
  parent.emplace(0, std::make_pair(Mask{0}, Vertex{-1}));
  std::deque<Mask> queue{0};
  while (!queue.empty()) {
    const Mask s = queue.front();
    queue.pop_front();
    const Mask rest = all & ~s;
    if (std::popcount(rest) <= k + 1) {
      std::vector<Vertex> order;
      for (Mask cur = s; cur != 0; cur = parent.at(cur).first) order.push_back(parent.at(cur).second);
      std::reverse(order.begin(), order.end());
      for_each_bit(rest, [&](Vertex v) { order.push_back(v); });
      return EliminationOrder{std::move(order)};
    }
    for_each_bit(rest, [&](Vertex v) {
      const Mask next = s | bit(v);
      if (parent.contains(next)) return;
      if (std::popcount(elimination_frontier(g, s, v)) > k) return;
      parent.emplace(next, std::make_pair(s, v));
      queue.push_back(next);
    });
  }
  (void)n;
  return std::nullopt;
}

}  // namespace detail

/// Exact treewidth with a witness decomposition, by search over elimination prefixes.
inline TreewidthResult treewidth_exact(const Graph& g, const Limits& limits = {}) {
  const int n = g.vertex_count();
  if (n > limits.treewidth) {
    throw CapabilityError("treewidth_exact: n=" + std::to_string(n) + " exceeds limit " +
                          std::to_string(limits.treewidth));
  }
  if (n == 0) return {-1, TreeDecomposition{}, EliminationOrder{}};
  for (int k = detail::degeneracy(g); k < n; ++k) {
    if (auto order = detail::elimination_order_of_width(g, k)) {
      auto td = decomposition_from_elimination_order(g, *order);
      return {td.width(), std::move(td), std::move(*order)};
    }
  }
  throw InternalError("treewidth search found no elimination order");
}

}  // namespace copsrobber
