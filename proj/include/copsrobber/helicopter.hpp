#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "copsrobber/errors.hpp"
#include "copsrobber/graph.hpp"

namespace copsrobber {

/// Occupied set plus one of its flaps.
struct HelicopterPosition {
  VertexSet occupied;
  VertexSet flap;
};

namespace detail {

inline std::vector<Mask> flaps_of(const Graph& g, Mask occupied) {
  std::vector<Mask> out;
  Mask rest = g.all_mask() & ~occupied;
  while (rest != 0) {
    const Vertex s = std::countr_zero(rest);
    const Mask comp = component_mask(g, s, g.all_mask() & ~occupied);
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

}  // namespace detail

/// Whether k cops win the jump-searching game. The robber's state is her flap R; the cops
/// win from R if some X with |X| ≤ k leaves only winning X-flaps among those R' with
/// N̄(R') ∩ R ≠ ∅. The game starts from R = V(G).
inline bool helicopter_cops_win(const Graph& g, int k, const Limits& limits = {}) {
  const int n = g.vertex_count();
  if (n > limits.helicopter) throw CapabilityError("helicopter: graph exceeds the size limit");
  if (n == 0) return true;

  struct Move {
    std::vector<int> flap_ids;
  };
  std::map<Mask, int> id_of;
  std::vector<Mask> flaps;
  std::vector<Mask> closed;  // N̄(flap)
  auto intern = [&](Mask f) {
    auto [it, inserted] = id_of.emplace(f, static_cast<int>(flaps.size()));
    if (inserted) {
      flaps.push_back(f);
      closed.push_back(closed_neighborhood_mask(g, f));
    }
    return it->second;
  };
  intern(g.all_mask());

  std::vector<Move> moves;
  for (Mask x = 0; x <= g.all_mask(); ++x) {
    if (std::popcount(x) > k) continue;
    Move mv;
    for (Mask f : detail::flaps_of(g, x)) mv.flap_ids.push_back(intern(f));
    moves.push_back(std::move(mv));
    if (x == g.all_mask()) break;
  }

  const int count = static_cast<int>(flaps.size());
  std::vector<char> winning(count, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Mask> bad(moves.size(), 0);  // union of N̄(R') over losing flaps R'
    for (std::size_t i = 0; i < moves.size(); ++i)
      for (int f : moves[i].flap_ids)
        if (!winning[f]) bad[i] |= closed[f];
    for (int r = 0; r < count; ++r) {
      if (winning[r]) continue;
      for (Mask b : bad) {
        if ((b & flaps[r]) == 0) {
          winning[r] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  return winning[0] != 0;
}

/// Least k for which the cops win the jump-searching game.
inline int helicopter_min_cops(const Graph& g, const Limits& limits = {}) {
  if (g.vertex_count() > limits.helicopter) throw CapabilityError("helicopter_min_cops: graph exceeds the size limit");
  for (int k = 0; k <= g.vertex_count(); ++k)
    if (helicopter_cops_win(g, k, limits)) return k;
  throw InternalError("helicopter_min_cops: no winning k");
}

}  // namespace copsrobber
