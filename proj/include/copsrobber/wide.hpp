#pragma once

#include <algorithm>
#include <optional>

#include "copsrobber/errors.hpp"
#include "copsrobber/graph.hpp"

namespace copsrobber {

/// Smallest number of vertices of g whose closed neighbourhood contains h, capped at cap+1.
inline int closed_domination_of(const Graph& g, const VertexSet& h, int cap) {
  const Mask target = h.to_mask();
  if (target == 0) return 0;
  const auto found = minimum_dominating_mask(g, target, g.all_mask(), cap);
  return found ? std::popcount(*found) : cap + 1;
}

/// H is k-wide in g: g[H] is k-connected and no S ⊆ V(g) with |S| < k has V(H) ⊆ N̄(S).
inline bool is_k_wide(const Graph& g, const VertexSet& h, int k, const Limits& limits = {}) {
  if (g.vertex_count() > limits.wideness) throw CapabilityError("is_k_wide: graph exceeds the size limit");
  g.check_set(h);
  if (h.empty() || k < 1) return false;
  if (!is_k_connected(induced_subgraph(g, h), k)) return false;
  return closed_domination_of(g, h, k - 1) >= k;
}

/// Largest M with H M-wide, for a nonempty connected H: max(1, min(κ(H), γ_g(H))).
inline int wideness_of(const Graph& g, const VertexSet& h) {
  const Graph sub = induced_subgraph(g, h);
  if (!is_connected(sub)) return 0;
  const int gamma = closed_domination_of(g, h, static_cast<int>(h.size()));
  const int kappa = vertex_connectivity(sub, gamma);
  return std::max(1, std::min(kappa, gamma));
}

struct WideWitness {
  int k = 0;
  VertexSet subgraph;
};

/// Largest k such that some connected induced subgraph is k-wide, by exhaustive search.
inline WideWitness lower_bound_wide(const Graph& g, const Limits& limits = {}) {
  const int n = g.vertex_count();
  if (n > limits.wideness) throw CapabilityError("lower_bound_wide: graph exceeds the exhaustive size limit");
  WideWitness best;
  if (n == 0) return best;
  for (Mask s = 1; s <= g.all_mask(); ++s) {
    if (std::popcount(s) <= best.k) continue;  // |H| ≥ k+1 is needed to beat best for k ≥ 1
    const Vertex first = std::countr_zero(s);
    if (component_mask(g, first, s) != s) continue;
    const VertexSet h = VertexSet::from_mask(s);
    const int gamma = closed_domination_of(g, h, best.k + 1);
    if (gamma <= best.k && best.k > 0) continue;
    const int value = wideness_of(g, h);
    if (value > best.k) best = {value, h};
    if (s == g.all_mask()) break;
  }
  if (best.k == 0) best = {1, VertexSet{0}};
  return best;
}

}  // namespace copsrobber
