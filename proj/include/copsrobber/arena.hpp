#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "copsrobber/errors.hpp"
#include "copsrobber/game.hpp"
#include "copsrobber/graph.hpp"

namespace copsrobber {

/// Cop side of the arena. Cops are individually indexed; `move` returns the new position of
/// every cop, each equal to its old position or a neighbour of it.
class CopPolicy {
 public:
  virtual ~CopPolicy() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Vertex> place(const Graph& g, int k) = 0;
  virtual std::vector<Vertex> move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) = 0;
};

/// Robber side. `move` receives the cop positions after the cops' move.
class RobberPolicy {
 public:
  virtual ~RobberPolicy() = default;
  virtual std::string name() const = 0;
  virtual Vertex place(const Graph& g, const std::vector<Vertex>& cops) = 0;
  virtual Vertex move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) = 0;
};

struct Ply {
  int round = 0;
  bool cops_moved = true;
  std::vector<Vertex> cops;
  Vertex robber = -1;  // -1 before the robber has been placed
};

struct Outcome {
  bool captured = false;
  int round = 0;  // capture round, or the number of rounds survived

  std::string to_string() const {
    return (captured ? "Capture(" : "Survived(") + std::to_string(round) + ")";
  }
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct Transcript {
  std::vector<Ply> plies;
  Outcome outcome;

  /// One line per ply: "round; mover; cops=[…]; robber=v".
  std::string to_string() const {
    std::ostringstream out;
    for (const auto& p : plies) {
      out << p.round << "; " << (p.cops_moved ? "cops" : "robber") << "; cops=[";
      for (std::size_t i = 0; i < p.cops.size(); ++i) out << (i ? "," : "") << p.cops[i];
      out << "]; robber=";
      if (p.robber < 0) out << "-";
      else out << p.robber;
      out << "\n";
    }
    return out.str();
  }
};

namespace detail {

inline void check_cop_move(const Graph& g, const CopPolicy& policy, const std::vector<Vertex>& before,
                           const std::vector<Vertex>& after) {
  if (after.size() != before.size()) {
    throw PolicyError(policy.name(), "returned " + std::to_string(after.size()) + " cops, expected " +
                                         std::to_string(before.size()));
  }
  for (std::size_t i = 0; i < after.size(); ++i) {
    if (after[i] < 0 || after[i] >= g.vertex_count()) throw PolicyError(policy.name(), "cop moved off the graph");
    if (after[i] != before[i] && !g.adjacent(before[i], after[i])) {
      throw PolicyError(policy.name(), "cop " + std::to_string(i) + " jumped from " + std::to_string(before[i]) +
                                           " to " + std::to_string(after[i]));
    }
  }
}

inline void check_robber_move(const Graph& g, const RobberPolicy& policy, const std::vector<Vertex>& cops, Vertex from,
                              Vertex to) {
  if (to < 0 || to >= g.vertex_count()) throw PolicyError(policy.name(), "robber moved off the graph");
  std::vector<char> blocked(g.vertex_count(), 0);
  for (Vertex c : cops) blocked[c] = 1;
  if (blocked[to]) throw PolicyError(policy.name(), "robber entered occupied vertex " + std::to_string(to));
  if (from >= 0 && bfs_distances(g, from, blocked)[to] < 0) {
    throw PolicyError(policy.name(), "no cop-free path from " + std::to_string(from) + " to " + std::to_string(to));
  }
}

}  // namespace detail

/// Plays one game. Round 0 is placement (cops, then robber); each later round is a cop move
/// followed by a robber move. Capture happens when a cop lands on the robber.
inline Transcript play(const Graph& g, int k, CopPolicy& cop_policy, RobberPolicy& robber_policy, int max_rounds) {
  if (k < 1) throw InputError("play: need at least one cop");
  if (max_rounds < 0) throw InputError("play: max_rounds must be non-negative");
  if (!is_connected(g)) throw InputError("play: graph must be connected");
  Transcript t;
  auto cops = cop_policy.place(g, k);
  if (static_cast<int>(cops.size()) != k) throw PolicyError(cop_policy.name(), "placed the wrong number of cops");
  for (Vertex c : cops)
    if (c < 0 || c >= g.vertex_count()) throw PolicyError(cop_policy.name(), "placed a cop off the graph");
  t.plies.push_back({0, true, cops, -1});
  Vertex robber = robber_policy.place(g, cops);
  detail::check_robber_move(g, robber_policy, cops, -1, robber);
  t.plies.push_back({0, false, cops, robber});

  for (int round = 1; round <= max_rounds; ++round) {
    auto next = cop_policy.move(g, cops, robber);
    detail::check_cop_move(g, cop_policy, cops, next);
    cops = std::move(next);
    t.plies.push_back({round, true, cops, robber});
    if (std::find(cops.begin(), cops.end(), robber) != cops.end()) {
      t.outcome = {true, round};
      return t;
    }
    const Vertex to = robber_policy.move(g, cops, robber);
    detail::check_robber_move(g, robber_policy, cops, robber, to);
    robber = to;
    t.plies.push_back({round, false, cops, robber});
  }
  t.outcome = {false, max_rounds};
  return t;
}

}  // namespace copsrobber
