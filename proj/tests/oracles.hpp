#pragma once

// Brute-force reference implementations. They share nothing with the library beyond the
// Graph container, and favour obviousness over speed.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "copsrobber/graph.hpp"

namespace oracle {

using copsrobber::Graph;
using copsrobber::Vertex;
using Mask = std::uint64_t;

inline bool connected_within(const Graph& g, Mask keep) {
  if (keep == 0) return true;
  Mask seen = Mask{1} << std::countr_zero(keep);
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!(seen >> v & 1)) continue;
      for (Vertex u : g.neighbors(v))
        if ((keep >> u & 1) && !(seen >> u & 1)) {
          seen |= Mask{1} << u;
          grew = true;
        }
    }
  }
  return seen == keep;
}

inline Mask full(const Graph& g) { return g.vertex_count() == 64 ? ~Mask{0} : (Mask{1} << g.vertex_count()) - 1; }

inline bool dominates(const Graph& g, Mask s, Mask target) {
  Mask covered = s;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (s >> v & 1)
      for (Vertex u : g.neighbors(v)) covered |= Mask{1} << u;
  return (covered & target) == target;
}

/// Least |S| ⊆ V(g) whose closed neighbourhood contains target.
inline int domination(const Graph& g, Mask target) {
  int best = g.vertex_count() + 1;
  for (Mask s = 0; s <= full(g); ++s)
    if (std::popcount(s) < best && dominates(g, s, target)) best = std::popcount(s);
  return best;
}

inline int domination(const Graph& g) { return domination(g, full(g)); }

/// Least |S| whose removal disconnects g; n−1 for complete graphs.
inline int connectivity(const Graph& g) {
  const int n = g.vertex_count();
  int best = n - 1;
  for (Mask s = 0; s <= full(g); ++s) {
    const Mask rest = full(g) & ~s;
    if (std::popcount(rest) >= 2 && std::popcount(s) < best && !connected_within(g, rest)) best = std::popcount(s);
  }
  return best;
}

/// Some induced subgraph on ≥ 4 vertices is a cycle.
inline bool has_chordless_cycle(const Graph& g) {
  for (Mask s = 0; s <= full(g); ++s) {
    if (std::popcount(s) < 4 || !connected_within(g, s)) continue;
    bool all_two = true;
    for (Vertex v = 0; v < g.vertex_count() && all_two; ++v) {
      if (!(s >> v & 1)) continue;
      int d = 0;
      for (Vertex u : g.neighbors(v)) d += s >> u & 1;
      all_two = d == 2;
    }
    if (all_two) return true;
  }
  return false;
}

/// Width of eliminating vertices in the given order (max higher-degree in the fill graph).
inline int elimination_width(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.vertex_count();
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> gone(n, 0);
  int width = 0;
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex u : adj[v])
      if (!gone[u]) later.push_back(u);
    width = std::max(width, static_cast<int>(later.size()));
    for (Vertex a : later)
      for (Vertex b : later)
        if (a != b) adj[a].insert(b);
    gone[v] = 1;
  }
  return width;
}

/// Treewidth as the minimum elimination width over all n! orders.
inline int treewidth(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  int best = g.vertex_count();
  do best = std::min(best, elimination_width(g, order));
  while (std::next_permutation(order.begin(), order.end()));
  return std::max(best, 0);
}

/// Naive cops-and-robber game with an unbounded-speed robber: repeated sweeps over
/// (sorted cop tuple, robber) until the cop-win set stops growing.
inline bool cops_win(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> tuples;
  std::vector<Vertex> cur(k, 0);
  auto gen = [&](auto&& self, int i, int lo) -> void {
    if (i == k) {
      tuples.push_back(cur);
      return;
    }
    for (int v = lo; v < n; ++v) {
      cur[i] = v;
      self(self, i + 1, v);
    }
  };
  gen(gen, 0, 0);

  auto occupied = [](const std::vector<Vertex>& c) {
    Mask m = 0;
    for (Vertex v : c) m |= Mask{1} << v;
    return m;
  };
  auto successors = [&](const std::vector<Vertex>& c) {
    std::set<std::vector<Vertex>> out;
    std::vector<Vertex> next(c.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == c.size()) {
        auto s = next;
        std::sort(s.begin(), s.end());
        out.insert(s);
        return;
      }
      next[i] = c[i];
      self(self, i + 1);
      for (Vertex u : g.neighbors(c[i])) {
        next[i] = u;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    return out;
  };
  auto reach = [&](Vertex from, Mask blocked) {
    Mask seen = Mask{1} << from;
    bool grew = true;
    while (grew) {
      grew = false;
      for (Vertex v = 0; v < n; ++v) {
        if (!(seen >> v & 1)) continue;
        for (Vertex u : g.neighbors(v))
          if (!(blocked >> u & 1) && !(seen >> u & 1)) {
            seen |= Mask{1} << u;
            grew = true;
          }
      }
    }
    return seen;
  };

  std::set<std::pair<std::vector<Vertex>, Vertex>> win;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : tuples) {
      const Mask occ = occupied(c);
      for (Vertex r = 0; r < n; ++r) {
        if ((occ >> r & 1) || win.count({c, r})) continue;
        bool good = false;
        for (const auto& next : successors(c)) {
          const Mask nocc = occupied(next);
          if (nocc >> r & 1) {
            good = true;
            break;
          }
          const Mask options = reach(r, nocc);
          bool all = true;
          for (Vertex r2 = 0; r2 < n && all; ++r2)
            if (options >> r2 & 1) all = win.count({next, r2}) > 0;
          if (all) {
            good = true;
            break;
          }
        }
        if (good) {
          win.insert({c, r});
          changed = true;
        }
      }
    }
  }
  for (const auto& c : tuples) {
    const Mask occ = occupied(c);
    bool all = true;
    for (Vertex r = 0; r < n && all; ++r)
      if (!(occ >> r & 1)) all = win.count({c, r}) > 0;
    if (all) return true;
  }
  return false;
}

inline int cop_number(const Graph& g) {
  for (int k = 1;; ++k)
    if (cops_win(g, k)) return k;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<copsrobber::Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace oracle
