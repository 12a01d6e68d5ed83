#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "copsrobber/decomposition.hpp"
#include "copsrobber/errors.hpp"
#include "copsrobber/graph.hpp"
#include "copsrobber/interval.hpp"
#include "copsrobber/rng.hpp"

namespace copsrobber {

inline Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete_graph: n must be positive");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
  if (n < 1) throw InputError("path_graph: n must be positive");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle_graph: n must be at least 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

/// Centre 0 joined to leaves 1..n-1.
inline Graph star_graph(int n) {
  if (n < 1) throw InputError("star_graph: n must be positive");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InputError("complete_bipartite: sides must be positive");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, std::move(edges));
}

/// Hub 0 joined to the cycle 1..n-1.
inline Graph wheel_graph(int n) {
  if (n < 4) throw InputError("wheel_graph: n must be at least 4");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(0, v);
    edges.emplace_back(v, v + 1 < n ? v + 1 : 1);
  }
  return Graph::from_edges_dedup(n, std::move(edges));
}

/// Triangle 0,1,2 with ears 3~{0,1}, 4~{1,2}, 5~{2,0}.
inline Graph sun3() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
}

inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges_dedup(10, std::move(edges));
}

// ---------------------------------------------------------------------------
// Theta family

/// Hubs are 0..m-1. For each hub pair (i<j) in lexicographic order and each path index p,
/// the path i - a - b - j uses a = m + 2·(pair·m + p), b = a + 1.
inline Graph theta_family(int m) {
  if (m < 3) throw InputError("theta_family: m must be at least 3");
  const int pairs = m * (m - 1) / 2;
  const int n = m + 2 * m * pairs;
  std::vector<Edge> edges;
  int next = m;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = i + 1; j < m; ++j) {
      for (int p = 0; p < m; ++p) {
        const Vertex a = next++;
        const Vertex b = next++;
        edges.emplace_back(i, a);
        edges.emplace_back(a, b);
        edges.emplace_back(b, j);
      }
    }
  }
  return Graph(n, std::move(edges));
}

inline int theta_vertex_count(int m) { return m + 2 * m * (m * (m - 1) / 2); }

/// Recognizes theta_family(m) by exact equality; returns m or 0.
inline int detect_theta(const Graph& g) {
  for (int m = 3; theta_vertex_count(m) <= g.vertex_count(); ++m)
    if (theta_vertex_count(m) == g.vertex_count() && theta_family(m) == g) return m;
  return 0;
}

/// Star-shaped decomposition: centre bag holds the hubs, one leaf bag {i, a, b, j} per path.
/// Width max{m−1, 3}.
inline TreeDecomposition theta_star_decomposition(int m) {
  if (m < 3) throw InputError("theta_star_decomposition: m must be at least 3");
  std::vector<VertexSet> bags;
  std::vector<Vertex> hubs(m);
  std::iota(hubs.begin(), hubs.end(), 0);
  bags.emplace_back(hubs);
  std::vector<Edge> tree_edges;
  int next = m;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = i + 1; j < m; ++j) {
      for (int p = 0; p < m; ++p) {
        bags.push_back(VertexSet{i, j, next, next + 1});
        tree_edges.emplace_back(0, static_cast<Vertex>(bags.size() - 1));
        next += 2;
      }
    }
  }
  TreeDecomposition td;
  td.tree = Graph(static_cast<int>(bags.size()), std::move(tree_edges));
  td.bags = std::move(bags);
  return td;
}

// ---------------------------------------------------------------------------
// Products

enum class ProductKind { Cartesian, Strong };

struct ProductSpec {
  std::vector<Graph> factors;
  ProductKind kind = ProductKind::Cartesian;

  int vertex_count() const {
    std::int64_t n = 1;
    for (const auto& f : factors) n *= f.vertex_count();
    if (n > 1'000'000) throw CapabilityError("product too large");
    return static_cast<int>(n);
  }

  /// Coordinates of product vertex `id`; the first factor is the most significant digit.
  std::vector<Vertex> coordinates(Vertex id) const {
    std::vector<Vertex> out(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      out[i] = id % factors[i].vertex_count();
      id /= factors[i].vertex_count();
    }
    return out;
  }

  Vertex id_of(const std::vector<Vertex>& coords) const {
    Vertex id = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) id = id * factors[i].vertex_count() + coords[i];
    return id;
  }
};

inline Graph product(const ProductSpec& spec) {
  if (spec.factors.empty()) throw InputError("product: empty factor list");
  for (const auto& f : spec.factors)
    if (f.vertex_count() == 0) throw InputError("product: empty factor graph");
  const int n = spec.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    const auto cu = spec.coordinates(u);
    for (Vertex v = u + 1; v < n; ++v) {
      const auto cv = spec.coordinates(v);
      bool adjacent = false;
      if (spec.kind == ProductKind::Cartesian) {
        int diff = 0;
        bool ok = true;
        for (std::size_t i = 0; i < cu.size(); ++i) {
          if (cu[i] == cv[i]) continue;
          ++diff;
          ok = ok && spec.factors[i].adjacent(cu[i], cv[i]);
        }
        adjacent = ok && diff == 1;
      } else {
        adjacent = true;
        for (std::size_t i = 0; i < cu.size(); ++i)
          adjacent = adjacent && (cu[i] == cv[i] || spec.factors[i].adjacent(cu[i], cv[i]));
      }
      if (adjacent) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

inline Graph cartesian_product(const ProductSpec& spec) {
  if (spec.kind != ProductKind::Cartesian) throw InputError("cartesian_product: spec kind is not Cartesian");
  return product(spec);
}

struct IntervalGraph {
  Graph graph;
  IntervalRepresentation representation;
};

/// P_{3m} ⊠ K_m. Vertex (i, j), i < 3m, j < m, has id i·m + j and integer interval
/// [i(2m+1) + j + 1, (i+1)(2m+1) + m + j + 1]; all endpoints are distinct.
inline IntervalGraph strong_product_path_clique(int m) {
  if (m < 1) throw InputError("strong_product_path_clique: m must be positive");
  ProductSpec spec{{path_graph(3 * m), complete_graph(m)}, ProductKind::Strong};
  IntervalGraph out{product(spec), {}};
  const std::int64_t block = 2 * m + 1;
  for (int i = 0; i < 3 * m; ++i)
    for (int j = 0; j < m; ++j)
      out.representation.intervals.push_back({Rational(i * block + j + 1), Rational((i + 1) * block + m + j + 1)});
  return out;
}

// ---------------------------------------------------------------------------
// Hypercubes

inline Graph hypercube(int m) {
  if (m < 1 || m > 20) throw InputError("hypercube: m must be in [1, 20]");
  const int n = 1 << m;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (int b = 0; b < m; ++b)
      if (const Vertex v = u ^ (1 << b); u < v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

/// Hamming-code dominating set of Q_m. For m = 2^k − 1 these are the codewords (syndrome
/// zero when bit i carries weight i+1), size 2^m/(m+1). Otherwise the code for the largest
/// such m0 < m is taken on the low m0 bits and every value of the remaining bits is kept,
/// giving size 2^{m−k}.
inline VertexSet hypercube_dominating_set(int m) {
  if (m < 1 || m > 20) throw InputError("hypercube_dominating_set: m must be in [1, 20]");
  int k = 1;
  while ((1 << (k + 1)) - 1 <= m) ++k;
  const int m0 = (1 << k) - 1;
  std::vector<Vertex> out;
  for (Vertex low = 0; low < (1 << m0); ++low) {
    int syndrome = 0;
    for (int i = 0; i < m0; ++i)
      if (low >> i & 1) syndrome ^= i + 1;
    if (syndrome != 0) continue;
    for (Vertex high = 0; high < (1 << (m - m0)); ++high) out.push_back(high << m0 | low);
  }
  return VertexSet(std::move(out));
}

inline Graph grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InputError("grid: dimensions must be positive");
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph(rows * cols, std::move(edges));
}

inline Graph grid(int r) { return grid(r, r); }

// ---------------------------------------------------------------------------
// Random graphs

/// G(n, M = 2n) sampled by rejection over vertex pairs, then every vertex of degree above
/// `degree_cap` deleted (survivors renumbered in increasing order).
inline Graph random_sparse_stripped(int n, std::uint64_t seed, int degree_cap) {
  if (n < 1) throw InputError("random_sparse_stripped: n must be positive");
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t m = 2 * static_cast<std::int64_t>(n);
  if (m > pairs) throw InputError("random_sparse_stripped: 2n edges exceed C(n,2) for n=" + std::to_string(n));
  Rng rng(seed);
  std::set<Edge> chosen;
  while (static_cast<std::int64_t>(chosen.size()) < m) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const auto v = static_cast<Vertex>(rng.below(n));
    if (u == v) continue;
    chosen.insert(std::minmax(u, v));
  }
  const Graph full(n, std::vector<Edge>(chosen.begin(), chosen.end()));
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v)
    if (full.degree(v) <= degree_cap) keep.push_back(v);
  return induced_subgraph(full, VertexSet(std::move(keep)));
}

inline Graph largest_component(const Graph& g) {
  const auto comps = connected_components(g);
  if (comps.empty()) return g;
  const auto* best = &comps.front();
  for (const auto& c : comps)
    if (c.size() > best->size()) best = &c;
  return induced_subgraph(g, *best);
}

/// Connected random interval graph: endpoints are a random permutation of 0..2n−1 paired
/// consecutively; draws repeat from the same stream until the graph is connected.
inline IntervalGraph random_interval_graph(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("random_interval_graph: n must be positive");
  Rng rng(seed);
  while (true) {
    std::vector<std::int64_t> points(2 * n);
    std::iota(points.begin(), points.end(), 0);
    rng.shuffle(points);
    IntervalGraph out;
    for (int v = 0; v < n; ++v) {
      const auto [lo, hi] = std::minmax(points[2 * v], points[2 * v + 1]);
      out.representation.intervals.push_back({Rational(lo), Rational(hi)});
    }
    out.graph = out.representation.intersection_graph();
    if (is_connected(out.graph)) return out;
  }
}

// ---------------------------------------------------------------------------
// Exhaustive small-graph enumeration

namespace detail {

inline std::uint64_t adjacency_code(const Graph& g, const std::vector<Vertex>& label_of) {
  const int n = g.vertex_count();
  std::vector<Vertex> at(n);
  for (Vertex v = 0; v < n; ++v) at[label_of[v]] = v;
  std::uint64_t code = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) code = code << 1 | (g.adjacent(at[i], at[j]) ? 1 : 0);
  return code;
}

}  // namespace detail

/// Canonical relabelling for small graphs (n ≤ 11): vertices are grouped by (degree, sorted
/// neighbour degrees) and the lexicographically largest adjacency code over all
/// class-respecting labellings is kept.
inline std::pair<std::uint64_t, Graph> canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 11) throw CapabilityError("canonical_form: at most 11 vertices");
  std::vector<std::pair<int, std::vector<int>>> inv(n);
  for (Vertex v = 0; v < n; ++v) {
    inv[v].first = g.degree(v);
    for (Vertex u : g.neighbors(v)) inv[v].second.push_back(g.degree(u));
    std::sort(inv[v].second.begin(), inv[v].second.end());
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return inv[a] > inv[b]; });
  std::vector<std::pair<int, int>> classes;  // [begin, end) in `order`
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::vector<Vertex> label_of(n);
  std::uint64_t best = 0;
  std::vector<Vertex> best_labels;
  // Iterate the product of per-class permutations of `order`.
  std::vector<Vertex> current = order;
  for (auto& [b, e] : classes) std::sort(current.begin() + b, current.begin() + e);
  while (true) {
    for (int pos = 0; pos < n; ++pos) label_of[current[pos]] = pos;
    const auto code = detail::adjacency_code(g, label_of);
    if (best_labels.empty() || code > best) {
      best = code;
      best_labels = label_of;
    }
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto [b, e] = classes[c];
      if (std::next_permutation(current.begin() + b, current.begin() + e)) break;
    }
    if (c == classes.size()) break;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(best_labels[u], best_labels[v]);
  return {best, Graph::from_edges_dedup(n, std::move(edges))};
}

/// All connected graphs on n vertices up to isomorphism (n ≤ 8), each in canonical labelling,
/// ordered by edge count then canonical code. Built by attaching a new vertex to every
/// nonempty neighbour set of each graph on n−1 vertices; every connected graph has a
/// vertex whose removal keeps it connected, so nothing is missed.
inline std::vector<Graph> all_connected_graphs(int n) {
  if (n < 1 || n > 8) throw CapabilityError("all_connected_graphs: n must be in [1, 8]");
  std::vector<Graph> level{Graph(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::set<std::pair<std::size_t, std::uint64_t>> seen;
    std::vector<std::pair<std::pair<std::size_t, std::uint64_t>, Graph>> next;
    for (const auto& g : level) {
      for (Mask nb = 1; nb < (Mask{1} << (size - 1)); ++nb) {
        std::vector<Edge> edges = g.edges();
        for_each_bit(nb, [&](Vertex u) { edges.emplace_back(u, size - 1); });
        auto [code, canon] = canonical_form(Graph(size, std::move(edges)));
        const auto key = std::make_pair(canon.edge_count(), code);
        if (seen.insert(key).second) next.emplace_back(key, std::move(canon));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [key, g] : next) level.push_back(std::move(g));
  }
  return level;
}

/// All trees on n vertices up to isomorphism (n ≤ 11), by leaf attachment.
inline std::vector<Graph> all_trees(int n) {
  if (n < 1 || n > 11) throw CapabilityError("all_trees: n must be in [1, 11]");
  std::vector<Graph> level{Graph(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::set<std::uint64_t> seen;
    std::vector<Graph> next;
    for (const auto& g : level) {
      for (Vertex u = 0; u < size - 1; ++u) {
        std::vector<Edge> edges = g.edges();
        edges.emplace_back(u, size - 1);
        auto [code, canon] = canonical_form(Graph(size, std::move(edges)));
        if (seen.insert(code).second) next.push_back(std::move(canon));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace copsrobber
