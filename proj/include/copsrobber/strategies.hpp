#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "copsrobber/accessible.hpp"
#include "copsrobber/arena.hpp"
#include "copsrobber/decomposition.hpp"
#include "copsrobber/errors.hpp"
#include "copsrobber/game.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/graph.hpp"
#include "copsrobber/interval.hpp"
#include "copsrobber/rng.hpp"
#include "copsrobber/wide.hpp"

namespace copsrobber {

/// All-pairs BFS distances with deterministic next-hop queries.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(const Graph& g) : g_(&g), dist_(g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) dist_[v] = bfs_distances(g, v);
  }

  int operator()(Vertex a, Vertex b) const { return dist_[a][b]; }

  /// Smallest-id neighbour of `from` on a shortest path to `to` (or `from` itself).
  Vertex step(Vertex from, Vertex to) const {
    if (from == to || dist_[from][to] < 0) return from;
    for (Vertex u : g_->neighbors(from))
      if (dist_[u][to] == dist_[from][to] - 1) return u;
    return from;
  }

 private:
  const Graph* g_ = nullptr;
  std::vector<std::vector<int>> dist_;
};

namespace detail {

inline std::optional<std::vector<Vertex>> capture_move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) {
  for (std::size_t i = 0; i < cops.size(); ++i) {
    if (g.adjacent(cops[i], robber)) {
      auto next = cops;
      next[i] = robber;
      return next;
    }
  }
  return std::nullopt;
}

inline std::vector<int> nearest_cop(const Graph& g, const std::vector<Vertex>& cops) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue;
  for (Vertex c : cops) {
    if (dist[c] < 0) {
      dist[c] = 0;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  for (auto& d : dist)
    if (d < 0) d = std::numeric_limits<int>::max();
  return dist;
}

inline std::vector<char> occupied_flags(const Graph& g, const std::vector<Vertex>& cops) {
  std::vector<char> blocked(g.vertex_count(), 0);
  for (Vertex c : cops) blocked[c] = 1;
  return blocked;
}

// Among `options`, the one farthest from the nearest cop, ties by smallest id.
inline std::optional<Vertex> farthest_from_cops(const Graph& g, const std::vector<Vertex>& cops,
                                                const std::vector<Vertex>& options) {
  const auto near = nearest_cop(g, cops);
  std::optional<Vertex> best;
  for (Vertex v : options)
    if (!best || near[v] > near[*best]) best = v;
  return best;
}

inline std::vector<Vertex> reachable(const Graph& g, const std::vector<Vertex>& cops, Vertex from) {
  const auto dist = bfs_distances(g, from, occupied_flags(g, cops));
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (dist[v] >= 0) out.push_back(v);
  return out;
}

inline std::vector<Vertex> unoccupied(const Graph& g, const std::vector<Vertex>& cops) {
  const auto blocked = occupied_flags(g, cops);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!blocked[v]) out.push_back(v);
  return out;
}

// Assigns indexed cops to the entries of `target` (a multiset reachable in one move).
inline std::vector<Vertex> match_to_multiset(const Graph& g, const std::vector<Vertex>& cops,
                                             const CopMultiset& target) {
  const std::size_t k = cops.size();
  std::vector<int> owner(k, -1);  // target slot → cop
  auto can = [&](std::size_t i, std::size_t j) { return cops[i] == target[j] || g.adjacent(cops[i], target[j]); };
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t i, std::vector<char>& seen) {
    for (std::size_t j = 0; j < k; ++j) {
      if (seen[j] || !can(i, j)) continue;
      seen[j] = 1;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), seen)) {
        owner[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<char> seen(k, 0);
    if (!augment(i, seen)) throw InternalError("match_to_multiset: target not reachable in one move");
  }
  std::vector<Vertex> out(k);
  for (std::size_t j = 0; j < k; ++j) out[owner[j]] = target[j];
  return out;
}

inline std::vector<Vertex> chase(const Graph& g, const DistanceTable& dist, const std::vector<Vertex>& cops,
                                 Vertex robber) {
  if (auto cap = capture_move(g, cops, robber)) return *cap;
  std::vector<Vertex> next(cops);
  for (auto& c : next) c = dist.step(c, robber);
  return next;
}

}  // namespace detail

// ===========================================================================
// Cop policies

/// Baseline: every cop steps along a shortest path toward the robber.
class GreedyCopPolicy : public CopPolicy {
 public:
  std::string name() const override { return "greedy"; }

  std::vector<Vertex> place(const Graph& g, int k) override {
    dist_ = DistanceTable(g);
    Mask covered = 0;
    std::vector<Vertex> out;
    for (int i = 0; i < k; ++i) {
      Vertex best = 0;
      int gain = -1;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int value = 0;
        for (Vertex u : g.neighbors(v)) value += (u < 64 && !(covered >> u & 1)) ? 1 : 0;
        value += (v < 64 && !(covered >> v & 1)) ? 1 : 0;
        if (value > gain) {
          gain = value;
          best = v;
        }
      }
      out.push_back(best);
      if (best < 64) covered |= bit(best);
      for (Vertex u : g.neighbors(best))
        if (u < 64) covered |= bit(u);
    }
    return out;
  }

  std::vector<Vertex> move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) override {
    return detail::chase(g, dist_, cops, robber);
  }

 private:
  DistanceTable dist_;
};

/// Baseline: every cop independently stays or steps to a uniformly random neighbour.
class RandomCopPolicy : public CopPolicy {
 public:
  explicit RandomCopPolicy(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }

  std::vector<Vertex> place(const Graph& g, int k) override {
    std::vector<Vertex> out;
    for (int i = 0; i < k; ++i) out.push_back(static_cast<Vertex>(rng_.below(g.vertex_count())));
    return out;
  }

  std::vector<Vertex> move(const Graph& g, const std::vector<Vertex>& cops, Vertex) override {
    std::vector<Vertex> next(cops);
    for (auto& c : next) {
      const auto choice = rng_.below(g.degree(c) + 1);
      if (choice > 0) c = g.neighbors(c)[choice - 1];
    }
    return next;
  }

 private:
  Rng rng_;
};

/// Cops sit on a dominating set and capture on their first move.
class DominationCopPolicy : public CopPolicy {
 public:
  DominationCopPolicy() = default;
  explicit DominationCopPolicy(VertexSet set) : set_(std::move(set)) {}
  std::string name() const override { return "domination"; }

  std::vector<Vertex> place(const Graph& g, int k) override {
    if (!set_) set_ = minimum_dominating_set(g);
    if (!is_dominating(g, *set_)) throw ConfigurationError("domination policy: set is not dominating");
    if (static_cast<int>(set_->size()) > k) {
      throw ConfigurationError("domination policy needs " + std::to_string(set_->size()) + " cops, got " +
                               std::to_string(k));
    }
    std::vector<Vertex> out(set_->begin(), set_->end());
    while (static_cast<int>(out.size()) < k) out.push_back((*set_)[0]);
    return out;
  }

  std::vector<Vertex> move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) override {
    if (auto cap = detail::capture_move(g, cops, robber)) return *cap;
    return cops;
  }

 private:
  std::optional<VertexSet> set_;
};

/// Plays the solver's recorded winning moves; outside the winning region it chases greedily.
class OptimalCopPolicy : public CopPolicy {
 public:
  explicit OptimalCopPolicy(std::shared_ptr<const GameSolution> solution) : sol_(std::move(solution)) {}
  std::string name() const override { return "optimal"; }

  std::vector<Vertex> place(const Graph& g, int k) override {
    if (k != sol_->cops()) {
      throw ConfigurationError("optimal cop policy was solved for " + std::to_string(sol_->cops()) + " cops, got " +
                               std::to_string(k));
    }
    if (!(g == sol_->graph())) throw InputError("optimal cop policy: graph differs from the solved graph");
    dist_ = DistanceTable(sol_->graph());
    return sol_->cop_placement();
  }

  std::vector<Vertex> move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) override {
    CopMultiset sorted(cops);
    std::sort(sorted.begin(), sorted.end());
    if (sol_->valid_robber_position(sorted, robber) && sol_->cop_wins(sorted, robber)) {
      return detail::match_to_multiset(g, cops, sol_->cop_strategy(sorted, robber));
    }
    return detail::chase(g, dist_, cops, robber);
  }

 private:
  std::shared_ptr<const GameSolution> sol_;
  DistanceTable dist_;
};

/// Bag-to-bag sweep along a tree decomposition. Cops hold a bag W_t; toward the robber's
/// side t2 the cops on X = W_t ∩ W_t2 stay while the others walk to W_t2 ∖ X one step per
/// round along shortest paths.
class SweepCopPolicy : public CopPolicy {
 public:
  explicit SweepCopPolicy(TreeDecomposition td) : td_(std::move(td)) {}
  std::string name() const override { return "sweep"; }

  std::vector<Vertex> place(const Graph& g, int k) override {
    if (!validate_tree_decomposition(g, td_)) throw InputError("sweep policy: invalid tree decomposition");
    if (k < td_.width() + 1) {
      throw ConfigurationError("sweep policy needs width+1 = " + std::to_string(td_.width() + 1) + " cops, got " +
                               std::to_string(k));
    }
    dist_ = DistanceTable(g);
    node_ = 0;
    target_.reset();
    const auto& bag = td_.bags[0];
    std::vector<Vertex> out;
    for (int i = 0; i < k; ++i) out.push_back(bag.empty() ? 0 : bag[std::min<std::size_t>(i, bag.size() - 1)]);
    return out;
  }

  std::vector<Vertex> move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) override {
    if (auto cap = detail::capture_move(g, cops, robber)) return *cap;
    if (!target_) start_phase(cops, robber);
    std::vector<Vertex> next(cops);
    bool done = true;
    for (std::size_t i = 0; i < cops.size(); ++i) {
      if (goal_[i] < 0) continue;
      next[i] = dist_.step(cops[i], goal_[i]);
      done = done && next[i] == goal_[i];
    }
    if (done) {
      node_ = *target_;
      target_.reset();
    }
    return next;
  }

 private:
  // Tree neighbour of node_ on the way to a bag containing r.
  int direction(Vertex r) const {
    const int t = td_.node_count();
    std::vector<int> parent(t, -1);
    std::deque<int> queue{node_};
    parent[node_] = node_;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (td_.bags[x].contains(r)) {
        int y = x;
        while (parent[y] != node_ && y != node_) y = parent[y];
        return y;
      }
      for (Vertex y : td_.tree.neighbors(x)) {
        if (parent[y] < 0) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    return node_;
  }

  void start_phase(const std::vector<Vertex>& cops, Vertex robber) {
    const int next = direction(robber);
    target_ = next;
    const VertexSet x = set_intersection(td_.bags[node_], td_.bags[next]);
    goal_.assign(cops.size(), -1);
    std::vector<char> used(cops.size(), 0);
    for (Vertex v : x) {
      for (std::size_t i = 0; i < cops.size(); ++i) {
        if (!used[i] && cops[i] == v) {
          used[i] = 1;
          goal_[i] = v;
          break;
        }
      }
    }
    std::size_t i = 0;
    for (Vertex v : set_difference(td_.bags[next], x)) {
      while (i < cops.size() && used[i]) ++i;
      if (i == cops.size()) break;
      used[i] = 1;
      goal_[i] = v;
    }
  }

  TreeDecomposition td_;
  DistanceTable dist_;
  int node_ = 0;
  std::optional<int> target_;
  std::vector<Vertex> goal_;
};

/// Three teams of w cops on an interval graph. Two teams pin the robber between slices
/// V_left and V_right; the third occupies either a dominating set of G[left+1, right−1]
/// (ending the game) or a slice of at most w vertices strictly between them, after which
/// it replaces the team on the side the robber left behind.
class ThreeTeamCopPolicy : public CopPolicy {
 public:
  ThreeTeamCopPolicy(IntervalRepresentation rep, int w) : rep_(std::move(rep)), w_(w) {}
  std::string name() const override { return "three-team"; }

  std::vector<Vertex> place(const Graph& g, int k) override {
    if (w_ < 1) throw ConfigurationError("three-team policy: w must be positive");
    if (k < 3 * w_) {
      throw ConfigurationError("three-team policy needs 3w = " + std::to_string(3 * w_) + " cops, got " +
                               std::to_string(k));
    }
    if (!validate_representation(g, rep_)) throw InputError("three-team policy: representation does not match graph");
    sl_ = slice_sequence(rep_);
    dist_ = DistanceTable(g);
    left_ = 0;
    right_ = sl_.length() - 1;
    team_ = {0, 1, 2};
    phase_.reset();
    const Vertex first = sl_.slices.front()[0];
    const Vertex last = sl_.slices.back()[0];
    std::vector<Vertex> out(k, first);
    for (int i = w_; i < 2 * w_; ++i) out[i] = last;
    return out;
  }

  std::vector<Vertex> move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) override {
    if (auto cap = detail::capture_move(g, cops, robber)) return *cap;
    if (phase_ && phase_->settled && !phase_->dominating) {
      const Rational& y = sl_.samples[phase_->slice];
      if (rep_.intervals[robber].right < y) {
        right_ = phase_->slice;
        std::swap(team_[1], team_[2]);
      } else {
        left_ = phase_->slice;
        std::swap(team_[0], team_[2]);
      }
      phase_.reset();
    }
    if (!phase_) {
      if (right_ - left_ <= 1) return cops;
      start_phase();
    }
    std::vector<Vertex> next(cops);
    bool settled = true;
    for (int m = 0; m < w_; ++m) {
      const int i = team_[2] * w_ + m;
      const Vertex goal = phase_->targets[m % phase_->targets.size()];
      next[i] = dist_.step(cops[i], goal);
      settled = settled && next[i] == goal;
    }
    phase_->settled = settled;
    return next;
  }

 private:
  struct Phase {
    bool dominating = false;
    int slice = -1;
    std::vector<Vertex> targets;
    bool settled = false;
  };

  void start_phase() {
    Phase p;
    const int a = left_ + 1, b = right_ - 1;
    const auto dom = domination_greedy_interval(rep_, sl_, a, b);
    if (static_cast<int>(dom.size()) <= w_) {
      p.dominating = true;
      p.targets.assign(dom.begin(), dom.end());
    } else {
      int best = -1;
      for (int i = a; i <= b; ++i)
        if (best < 0 || sl_.slices[i].size() < sl_.slices[best].size()) best = i;
      if (static_cast<int>(sl_.slices[best].size()) > w_) {
        throw ConfigurationError("three-team policy: w is below w(G) (no dominating set or slice of size <= w)");
      }
      p.slice = best;
      p.targets.assign(sl_.slices[best].begin(), sl_.slices[best].end());
    }
    phase_ = std::move(p);
  }

  IntervalRepresentation rep_;
  int w_;
  SliceSequence sl_;
  DistanceTable dist_;
  int left_ = 0;
  int right_ = 0;
  std::array<int, 3> team_{0, 1, 2};  // team index playing left, right, free
  std::optional<Phase> phase_;
};

/// Lifts a factor strategy to a Cartesian product G1 × rest: each virtual cop on u1 becomes
/// the n/n1 real cops on {u1} × V(rest); the virtual robber is the first coordinate.
class ProductLiftCopPolicy : public CopPolicy {
 public:
  ProductLiftCopPolicy(ProductSpec spec, std::unique_ptr<CopPolicy> factor_policy, int factor_cops)
      : spec_(std::move(spec)), factor_(std::move(factor_policy)), factor_cops_(factor_cops) {
    if (spec_.factors.empty()) throw InputError("product lift: empty factor list");
    if (spec_.kind != ProductKind::Cartesian) throw InputError("product lift: only Cartesian products are supported");
  }
  std::string name() const override { return "product-lift(" + factor_->name() + ")"; }

  std::vector<Vertex> place(const Graph& g, int k) override {
    if (!(g == cartesian_product(spec_))) throw InputError("product lift: graph is not the given product");
    rest_ = g.vertex_count() / spec_.factors.front().vertex_count();
    if (k != factor_cops_ * rest_) {
      throw ConfigurationError("product lift needs " + std::to_string(factor_cops_ * rest_) + " cops, got " +
                               std::to_string(k));
    }
    return lift(factor_->place(spec_.factors.front(), factor_cops_));
  }

  std::vector<Vertex> move(const Graph&, const std::vector<Vertex>& cops, Vertex robber) override {
    std::vector<Vertex> virtual_cops;
    for (int i = 0; i < factor_cops_; ++i) virtual_cops.push_back(cops[i * rest_] / rest_);
    return lift(factor_->move(spec_.factors.front(), virtual_cops, robber / rest_));
  }

 private:
  std::vector<Vertex> lift(const std::vector<Vertex>& virtual_cops) const {
    std::vector<Vertex> out;
    for (Vertex u : virtual_cops)
      for (int r = 0; r < rest_; ++r) out.push_back(u * rest_ + r);
    return out;
  }

  ProductSpec spec_;
  std::unique_ptr<CopPolicy> factor_;
  int factor_cops_;
  int rest_ = 1;
};

// ===========================================================================
// Robber policies

/// Baseline: move to the reachable vertex farthest from the nearest cop.
class GreedyRobberPolicy : public RobberPolicy {
 public:
  std::string name() const override { return "greedy"; }
  Vertex place(const Graph& g, const std::vector<Vertex>& cops) override {
    return *detail::farthest_from_cops(g, cops, detail::unoccupied(g, cops));
  }
  Vertex move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) override {
    return *detail::farthest_from_cops(g, cops, detail::reachable(g, cops, robber));
  }
};

class RandomRobberPolicy : public RobberPolicy {
 public:
  explicit RandomRobberPolicy(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }
  Vertex place(const Graph& g, const std::vector<Vertex>& cops) override {
    const auto options = detail::unoccupied(g, cops);
    if (options.empty()) throw ConfigurationError("random robber: no free vertex");
    return options[rng_.below(options.size())];
  }
  Vertex move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) override {
    const auto options = detail::reachable(g, cops, robber);
    return options[rng_.below(options.size())];
  }

 private:
  Rng rng_;
};

/// Plays the solver's robber strategy (avoid the cop-win region, else delay capture).
class OptimalRobberPolicy : public RobberPolicy {
 public:
  explicit OptimalRobberPolicy(std::shared_ptr<const GameSolution> solution) : sol_(std::move(solution)) {}
  std::string name() const override { return "optimal"; }

  Vertex place(const Graph& g, const std::vector<Vertex>& cops) override {
    if (static_cast<int>(cops.size()) != sol_->cops()) {
      throw ConfigurationError("optimal robber policy was solved for " + std::to_string(sol_->cops()) + " cops, got " +
                               std::to_string(cops.size()));
    }
    if (!(g == sol_->graph())) throw InputError("optimal robber policy: graph differs from the solved graph");
    const auto r = sol_->robber_placement(sorted(cops));
    if (!r) throw ConfigurationError("optimal robber: no free vertex");
    return *r;
  }

  Vertex move(const Graph&, const std::vector<Vertex>& cops, Vertex robber) override {
    const auto r = sol_->robber_strategy(sorted(cops), robber);
    return r ? *r : robber;
  }

 private:
  static CopMultiset sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
  }
  std::shared_ptr<const GameSolution> sol_;
};

/// Evader for a k-wide subgraph H against at most k−1 cops: after every cop move it goes to
/// a vertex of H outside N̄(cops), reachable by a cop-free path, farthest from the nearest
/// cop (ties by smallest id).
class WideEvaderPolicy : public RobberPolicy {
 public:
  WideEvaderPolicy(const Graph& g, VertexSet h, int k, const Limits& limits = {}) : h_(std::move(h)), k_(k) {
    if (!is_k_wide(g, h_, k_, limits)) throw ConfigurationError("wide evader: subgraph is not " + std::to_string(k) + "-wide");
  }
  std::string name() const override { return "wide-evader"; }

  Vertex place(const Graph& g, const std::vector<Vertex>& cops) override {
    if (static_cast<int>(cops.size()) > k_ - 1) {
      throw ConfigurationError("wide evader handles at most " + std::to_string(k_ - 1) + " cops, got " +
                               std::to_string(cops.size()));
    }
    return choose(g, cops, detail::unoccupied(g, cops));
  }

  Vertex move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) override {
    return choose(g, cops, detail::reachable(g, cops, robber));
  }

 private:
  Vertex choose(const Graph& g, const std::vector<Vertex>& cops, const std::vector<Vertex>& options) const {
    const auto controlled = closed_neighborhood(g, VertexSet(cops));
    std::vector<Vertex> good;
    for (Vertex v : options)
      if (h_.contains(v) && !controlled.contains(v)) good.push_back(v);
    if (good.empty()) throw InternalError("wide evader: no uncontrolled vertex of H is reachable");
    return *detail::farthest_from_cops(g, cops, good);
  }

  VertexSet h_;
  int k_;
};

/// Evader for theta_family(m) against at most m−1 cops: stays on a hub outside N̄(cops),
/// switching to the farthest such hub (ties by id) through a cop-free path when needed.
class ThetaEvaderPolicy : public RobberPolicy {
 public:
  explicit ThetaEvaderPolicy(int m) : m_(m), theta_(theta_family(m)) {}
  std::string name() const override { return "theta-evader"; }

  Vertex place(const Graph& g, const std::vector<Vertex>& cops) override {
    if (!(g == theta_)) throw InputError("theta evader: graph is not theta_family(" + std::to_string(m_) + ")");
    if (static_cast<int>(cops.size()) > m_ - 1) {
      throw ConfigurationError("theta evader handles at most " + std::to_string(m_ - 1) + " cops, got " +
                               std::to_string(cops.size()));
    }
    return choose(g, cops, detail::unoccupied(g, cops), -1);
  }

  Vertex move(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) override {
    return choose(g, cops, detail::reachable(g, cops, robber), robber);
  }

 private:
  Vertex choose(const Graph& g, const std::vector<Vertex>& cops, const std::vector<Vertex>& options, Vertex current) const {
    const auto controlled = closed_neighborhood(g, VertexSet(cops));
    if (current >= 0 && current < m_ && !controlled.contains(current)) return current;
    std::vector<Vertex> hubs;
    for (Vertex v : options)
      if (v < m_ && !controlled.contains(v)) hubs.push_back(v);
    if (hubs.empty()) throw InternalError("theta evader: every reachable hub is controlled");
    return *detail::farthest_from_cops(g, cops, hubs);
  }

  int m_;
  Graph theta_;
};

namespace detail {

// One level of the recursive accessible-pair evader. Cops are given in the level's own
// coordinates, where the extra id n stands for a cop that is outside this level's graph.
class AccessNode {
 public:
  virtual ~AccessNode() = default;
  virtual Vertex initial(const CopMultiset& cops) = 0;
  virtual Vertex respond(const CopMultiset& cops, Vertex robber) = 0;
};

class AccessBaseNode : public AccessNode {
 public:
  explicit AccessBaseNode(std::shared_ptr<const GameSolution> sol) : sol_(std::move(sol)) {}

  Vertex initial(const CopMultiset& cops) override {
    const auto r = sol_->robber_placement(sorted(cops));
    if (!r) throw InternalError("accessible evader: no admissible start vertex");
    return *r;
  }

  Vertex respond(const CopMultiset& cops, Vertex robber) override {
    const auto r = sol_->robber_strategy(sorted(cops), robber);
    if (!r) throw InternalError("accessible evader: invariant lost in base level");
    return *r;
  }

 private:
  static CopMultiset sorted(CopMultiset c) {
    std::sort(c.begin(), c.end());
    return c;
  }
  std::shared_ptr<const GameSolution> sol_;
};

class AccessCompositeNode : public AccessNode {
 public:
  AccessCompositeNode(const AccessiblePairData& data, std::unique_ptr<AccessNode> left, std::unique_ptr<AccessNode> right)
      : data_(&data) {
    const auto& c = *data.composite;
    child_[0] = std::move(left);
    child_[1] = std::move(right);
    const int n = data.graph.vertex_count();
    for (int j = 0; j < 2; ++j) {
      local_[j].assign(n + 1, -1);
      for (Vertex u = 0; u < static_cast<Vertex>(c.embed[j].size()); ++u)
        if (c.embed[j][u] >= 0) local_[j][c.embed[j][u]] = u;
    }
  }

  Vertex initial(const CopMultiset& cops) override {
    for (int j = 0; j < 2; ++j) {
      if (auto m = project(j, cops)) {
        side_ = j;
        return lift(j, child_[j]->initial(*m));
      }
    }
    throw InternalError("accessible evader: both sides hold too many cops");
  }

  Vertex respond(const CopMultiset& cops, Vertex robber) override {
    if (auto m = project(side_, cops)) return lift(side_, child_[side_]->respond(*m, local_[side_][robber]));
    side_ = 1 - side_;
    auto m = project(side_, cops);
    if (!m) throw InternalError("accessible evader: both sides hold too many cops");
    return lift(side_, child_[side_]->initial(*m));
  }

 private:
  // Cops in V_j keep their vertex, cops in U_j sit on the child's v, all others are
  // outside; fails when A_j = V_j ∪ U_j holds |X_j| or more cops.
  std::optional<CopMultiset> project(int j, const CopMultiset& cops) const {
    const auto& c = *data_->composite;
    const auto& child = *c.child[j];
    const auto limit = static_cast<std::size_t>(child.order() - 1);
    CopMultiset out;
    for (Vertex cop : cops) {
      if (local_[j][cop] >= 0) out.push_back(local_[j][cop]);
      else if (c.u[j].contains(cop)) out.push_back(child.v);
    }
    if (out.size() > limit) return std::nullopt;
    while (out.size() < limit) out.push_back(child.graph.vertex_count());
    return out;
  }

  Vertex lift(int j, Vertex child_vertex) const { return data_->composite->embed[j][child_vertex]; }

  const AccessiblePairData* data_;
  std::unique_ptr<AccessNode> child_[2];
  std::vector<Vertex> local_[2];
  int side_ = 0;
};

inline std::unique_ptr<AccessNode> build_access_node(const AccessiblePairData& d,
                                                     std::shared_ptr<const GameSolution>& base_solution,
                                                     const Limits& limits) {
  if (!d.composite) {
    if (!base_solution) {
      auto sol = solve_accessibility_game(d.graph, d.x, d.v, d.order() - 1, true, limits);
      if (sol.winner() != Winner::Robber) throw ConstructionError("accessible evader: base pair is not accessible");
      base_solution = std::make_shared<const GameSolution>(std::move(sol));
    } else if (!(base_solution->graph() == with_reserve(d.graph, d.v))) {
      throw InputError("accessible evader: differing base pairs are not supported");
    }
    return std::make_unique<AccessBaseNode>(base_solution);
  }
  auto left = build_access_node(*d.composite->child[0], base_solution, limits);
  auto right = build_access_node(*d.composite->child[1], base_solution, limits);
  return std::make_unique<AccessCompositeNode>(d, std::move(left), std::move(right));
}

}  // namespace detail

/// Recursive evader for an accessible-pair graph against at most |X|−1 cops. On a composite
/// level the robber lives in one half V_j while fewer than |X_j| cops are in V_j ∪ U_j,
/// following that half's strategy; once that many arrive she crosses U_j, X, U_{3−j} into the
/// other half. Base levels follow the solved restricted game. She never ends a move in X ∪ {v}.
class AccessibleEvaderPolicy : public RobberPolicy {
 public:
  explicit AccessibleEvaderPolicy(AccessiblePairData data, const Limits& limits = {})
      : data_(std::make_shared<const AccessiblePairData>(std::move(data))) {
    if (!check_accessible_structure(*data_)) throw InputError("accessible evader: malformed construction");
    std::shared_ptr<const GameSolution> base;
    root_ = detail::build_access_node(*data_, base, limits);
  }
  std::string name() const override { return "accessible-evader"; }

  Vertex place(const Graph& g, const std::vector<Vertex>& cops) override {
    if (!(g == data_->graph)) throw InputError("accessible evader: graph differs from the construction");
    if (static_cast<int>(cops.size()) > data_->order() - 1) {
      throw ConfigurationError("accessible evader handles at most " + std::to_string(data_->order() - 1) +
                               " cops, got " + std::to_string(cops.size()));
    }
    return root_->initial(padded(cops));
  }

  Vertex move(const Graph&, const std::vector<Vertex>& cops, Vertex robber) override {
    return root_->respond(padded(cops), robber);
  }

 private:
  CopMultiset padded(const std::vector<Vertex>& cops) const {
    CopMultiset out(cops.begin(), cops.end());
    while (static_cast<int>(out.size()) < data_->order() - 1) out.push_back(data_->graph.vertex_count());
    return out;
  }

  std::shared_ptr<const AccessiblePairData> data_;
  std::unique_ptr<detail::AccessNode> root_;
};

}  // namespace copsrobber
