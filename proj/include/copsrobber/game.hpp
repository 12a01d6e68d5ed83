#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "copsrobber/errors.hpp"
#include "copsrobber/graph.hpp"

namespace copsrobber {

/// Sorted cop positions; several cops may share a vertex.
using CopMultiset = std::vector<Vertex>;

enum class Turn { CopsToMove, RobberToMove };

struct GameState {
  CopMultiset cops;
  Vertex robber = -1;
  Turn turn = Turn::CopsToMove;
};

enum class Winner { Cops, Robber };

inline const char* to_string(Winner w) { return w == Winner::Cops ? "cops" : "robber"; }

/// Ranks the size-k multisets over {0..n-1} through the combinatorial number system
/// applied to the strictly increasing sequence a_i + i.
class MultisetIndexer {
 public:
  MultisetIndexer(int n, int k) : n_(n), k_(k) {
    const int top = n + k;
    binom_.assign(top + 1, std::vector<std::uint64_t>(k + 2, 0));
    for (int a = 0; a <= top; ++a) {
      binom_[a][0] = 1;
      for (int b = 1; b <= std::min(a, k + 1); ++b) binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
    }
    count_ = (n == 0 && k > 0) ? 0 : binom_[n + k - 1 < 0 ? 0 : n + k - 1][k];
    if (n == 0 && k == 0) count_ = 1;
  }

  static std::uint64_t count(int n, int k) {
    if (k == 0) return 1;
    if (n == 0) return 0;
    // C(n+k-1, k) with overflow saturation
    long double value = 1;
    for (int i = 1; i <= k; ++i) value = value * (n - 1 + i) / i;
    if (value > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 4)) {
      return std::numeric_limits<std::uint64_t>::max() / 4;
    }
    return static_cast<std::uint64_t>(value + 0.5L);
  }

  std::uint64_t size() const { return count_; }
  int vertices() const { return n_; }
  int cops() const { return k_; }

  std::uint64_t rank(const CopMultiset& m) const {
    std::uint64_t r = 0;
    for (int i = 0; i < k_; ++i) r += binom_[m[i] + i][i + 1];
    return r;
  }

  CopMultiset unrank(std::uint64_t r) const {
    CopMultiset m(k_);
    for (int i = k_ - 1; i >= 0; --i) {
      int b = i;
      while (binom_[b + 1][i + 1] <= r) ++b;
      r -= binom_[b][i + 1];
      m[i] = b - i;
    }
    return m;
  }

 private:
  int n_;
  int k_;
  std::uint64_t count_ = 0;
  std::vector<std::vector<std::uint64_t>> binom_;
};

/// Vertices the robber can reach from her vertex in g − cops (including staying put).
inline std::vector<Vertex> robber_moves(const Graph& g, const GameState& s) {
  g.check_vertex(s.robber);
  std::vector<char> blocked(g.vertex_count(), 0);
  for (Vertex c : s.cops) blocked[c] = 1;
  if (blocked[s.robber]) return {};
  const auto dist = bfs_distances(g, s.robber, blocked);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (dist[v] >= 0) out.push_back(v);
  return out;
}

namespace detail {

template <typename F>
void for_each_cop_move_raw(const Graph& g, const CopMultiset& cops, F&& f) {
  const int k = static_cast<int>(cops.size());
  CopMultiset next(cops);
  std::vector<int> choice(k, -1);  // -1 = stay, otherwise neighbour index
  while (true) {
    for (int i = 0; i < k; ++i) next[i] = choice[i] < 0 ? cops[i] : g.neighbors(cops[i])[choice[i]];
    f(next);
    int i = 0;
    while (i < k) {
      if (choice[i] + 1 < g.degree(cops[i])) {
        ++choice[i];
        break;
      }
      choice[i] = -1;
      ++i;
    }
    if (i == k) return;
  }
}

}  // namespace detail

/// All distinct multisets reachable by letting every cop stay or step to a neighbour.
inline std::vector<CopMultiset> cop_moves(const Graph& g, const GameState& s) {
  for (Vertex c : s.cops) g.check_vertex(c);
  std::vector<CopMultiset> out;
  detail::for_each_cop_move_raw(g, s.cops, [&](const CopMultiset& m) {
    CopMultiset sorted(m);
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Optional restriction of where the robber may end her moves, and a side condition
/// (evaluated on the cop multiset and the robber's new vertex) that every robber
/// end position must satisfy. The plain game uses neither.
struct RobberConstraint {
  std::vector<char> allowed;  // empty = every vertex
  std::function<bool(const CopMultiset&, const std::vector<std::uint8_t>& component_of, Vertex)> side_condition;
};

/// Solved fixed-k game. States are (cop multiset, robber vertex) with cops to move, i.e.
/// positions right after a robber move; robber-to-move positions are indexed by
/// (cop multiset, component of g − cops) because the robber's options only depend on it.
class GameSolution {
 public:
  static constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

  int cops() const { return indexer_.cops(); }
  Winner winner() const { return winner_; }
  const Graph& graph() const { return *graph_; }
  const MultisetIndexer& indexer() const { return indexer_; }

  /// Whether (cops, robber) with cops to move is a cop win; invalid states report false.
  bool cop_wins(const CopMultiset& cops, Vertex robber) const {
    return level(cops, robber) != kUnreached;
  }

  /// Rounds-to-capture bound for a winning cop-to-move state (0 = capture on the next move).
  std::uint32_t level(const CopMultiset& cops, Vertex robber) const {
    return level_[indexer_.rank(cops) * n_ + robber];
  }

  bool valid_robber_position(const CopMultiset& cops, Vertex robber) const {
    return valid_[indexer_.rank(cops) * n_ + robber] != 0;
  }

  /// Recorded winning cop move for a cop-win state.
  CopMultiset cop_strategy(const CopMultiset& cops, Vertex robber) const {
    const auto r = indexer_.rank(cops);
    if (level_[r * n_ + robber] == kUnreached) throw InputError("cop_strategy: state is not a cop win");
    return indexer_.unrank(move_[r * n_ + robber]);
  }

  /// Robber reply after the cops moved to `cops`: a valid end vertex reachable from `robber`
  /// that stays outside the cop-win region when possible, otherwise the one postponing
  /// capture longest. Ties prefer the vertex farthest from the nearest cop, then smallest id.
  std::optional<Vertex> robber_strategy(const CopMultiset& cops, Vertex robber) const {
    GameState s{cops, robber, Turn::RobberToMove};
    return best_robber_choice(cops, robber_moves(*graph_, s));
  }

  /// Robber placement against an initial cop multiset.
  std::optional<Vertex> robber_placement(const CopMultiset& cops) const {
    std::vector<Vertex> options;
    std::vector<char> occupied(n_, 0);
    for (Vertex c : cops) occupied[c] = 1;
    for (Vertex v = 0; v < n_; ++v)
      if (!occupied[v]) options.push_back(v);
    return best_robber_choice(cops, options);
  }

  /// Initial cop multiset: a winning one with least worst-case level, else the first multiset.
  const CopMultiset& cop_placement() const { return placement_; }

  std::uint64_t state_count() const { return indexer_.size() * static_cast<std::uint64_t>(n_); }

 private:
  friend class GameSolver;

  explicit GameSolution(std::shared_ptr<const Graph> g, int k) : graph_(std::move(g)), indexer_(graph_->vertex_count(), k) {
    n_ = graph_->vertex_count();
  }

  std::optional<Vertex> best_robber_choice(const CopMultiset& cops, const std::vector<Vertex>& options) const {
    std::vector<char> blocked(n_, 0);
    for (Vertex c : cops) blocked[c] = 1;
    std::vector<int> nearest(n_, std::numeric_limits<int>::max());
    for (Vertex c : cops) {
      auto d = bfs_distances(*graph_, c);
      for (Vertex v = 0; v < n_; ++v)
        if (d[v] >= 0) nearest[v] = std::min(nearest[v], d[v]);
    }
    std::optional<Vertex> best;
    auto key = [&](Vertex v) {
      const auto lv = level(cops, v);
      const std::uint64_t outcome = lv == kUnreached ? std::numeric_limits<std::uint64_t>::max() : lv;
      return std::make_tuple(outcome, nearest[v], -v);
    };
    for (Vertex v : options) {
      if (!valid_robber_position(cops, v)) continue;
      if (!best || key(v) > key(*best)) best = v;
    }
    return best;
  }

  std::shared_ptr<const Graph> graph_;
  MultisetIndexer indexer_;
  int n_ = 0;
  Winner winner_ = Winner::Robber;
  std::vector<std::uint32_t> level_;
  std::vector<std::uint32_t> move_;
  std::vector<std::uint8_t> valid_;
  CopMultiset placement_;
};

/// Backward least-fixed-point solver for the unbounded-speed game with k cops.
class GameSolver {
 public:
  static std::uint64_t state_estimate(int n, int k) {
    const auto m = MultisetIndexer::count(n, k);
    const long double est = static_cast<long double>(m) * n * 2;
    return est > 1e18L ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(est);
  }

  static GameSolution solve(const Graph& g, int k, const Limits& limits = {}, const RobberConstraint& constraint = {}) {
    const int n = g.vertex_count();
    if (n == 0) throw InputError("solve: empty graph");
    if (n > 255) throw CapabilityError("solve: more than 255 vertices");
    if (k < 0) throw InputError("solve: negative cop count");
    const auto estimate = state_estimate(n, k);
    if (estimate > limits.state_budget) {
      throw CapabilityError("solve: state estimate " + std::to_string(estimate) + " exceeds budget " +
                            std::to_string(limits.state_budget) + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                            ")");
    }
    GameSolution sol(std::make_shared<const Graph>(g), k);
    const auto& idx = sol.indexer_;
    const std::uint64_t multisets = idx.size();
    const std::uint64_t states = multisets * n;

    std::vector<std::uint8_t> component(states, 0);  // component id of v in g − C; 255 = occupied
    std::vector<std::uint8_t> comp_count(multisets, 0);
    std::vector<std::uint16_t> pending(states, 0);  // per (C, component): valid robber vertices not yet won
    sol.valid_.assign(states, 0);
    sol.level_.assign(states, GameSolution::kUnreached);
    sol.move_.assign(states, 0);

    std::vector<char> blocked(n);
    for (std::uint64_t r = 0; r < multisets; ++r) {
      const auto cops = idx.unrank(r);
      std::fill(blocked.begin(), blocked.end(), 0);
      for (Vertex c : cops) blocked[c] = 1;
      std::uint8_t* comp = &component[r * n];
      std::fill(comp, comp + n, std::uint8_t{255});
      std::uint8_t next_id = 0;
      for (Vertex s = 0; s < n; ++s) {
        if (blocked[s] || comp[s] != 255) continue;
        std::vector<Vertex> stack{s};
        comp[s] = next_id;
        while (!stack.empty()) {
          const Vertex v = stack.back();
          stack.pop_back();
          for (Vertex u : g.neighbors(v)) {
            if (!blocked[u] && comp[u] == 255) {
              comp[u] = next_id;
              stack.push_back(u);
            }
          }
        }
        ++next_id;
      }
      comp_count[r] = next_id;
      std::vector<std::uint8_t> comp_vec(comp, comp + n);
      for (Vertex v = 0; v < n; ++v) {
        if (blocked[v]) continue;
        bool ok = constraint.allowed.empty() || constraint.allowed[v];
        if (ok && constraint.side_condition) ok = constraint.side_condition(cops, comp_vec, v);
        if (ok) {
          sol.valid_[r * n + v] = 1;
          ++pending[r * n + comp[v]];
        }
      }
    }

    std::deque<std::uint64_t> queue;  // cop-win states in nondecreasing level order
    // Level 0: a cop is on or next to the robber.
    for (std::uint64_t r = 0; r < multisets; ++r) {
      const auto cops = idx.unrank(r);
      for (Vertex v = 0; v < n; ++v) {
        const auto s = r * n + v;
        if (!sol.valid_[s]) continue;
        for (std::size_t i = 0; i < cops.size(); ++i) {
          if (!g.adjacent(cops[i], v)) continue;
          CopMultiset next(cops);
          next[i] = v;
          std::sort(next.begin(), next.end());
          sol.level_[s] = 0;
          sol.move_[s] = static_cast<std::uint32_t>(idx.rank(next));
          queue.push_back(s);
          break;
        }
      }
    }

    // Robber-to-move nodes whose component has no valid end vertex are immediate cop wins.
    std::vector<std::uint64_t> empty_nodes;
    for (std::uint64_t r = 0; r < multisets; ++r)
      for (int c = 0; c < comp_count[r]; ++c)
        if (pending[r * n + c] == 0) empty_nodes.push_back(r * n + c);

    auto on_robber_node_won = [&](std::uint64_t target_rank, std::uint8_t comp_id, std::uint32_t lvl) {
      const auto target = idx.unrank(target_rank);
      const std::uint8_t* comp = &component[target_rank * n];
      // The move relation is symmetric, so predecessors are the successors.
      std::vector<std::uint64_t> preds;
      detail::for_each_cop_move_raw(g, target, [&](const CopMultiset& m) {
        CopMultiset sorted(m);
        std::sort(sorted.begin(), sorted.end());
        preds.push_back(idx.rank(sorted));
      });
      std::sort(preds.begin(), preds.end());
      preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
      for (auto p : preds) {
        for (Vertex v = 0; v < n; ++v) {
          if (comp[v] != comp_id) continue;
          const auto s = p * n + v;
          if (!sol.valid_[s] || sol.level_[s] != GameSolution::kUnreached) continue;
          sol.level_[s] = lvl;
          sol.move_[s] = static_cast<std::uint32_t>(target_rank);
          queue.push_back(s);
        }
      }
    };

    // Moving there leaves the robber without a legal end vertex, which ends the game at once.
    for (auto node : empty_nodes) on_robber_node_won(node / n, static_cast<std::uint8_t>(node % n), 0);

    while (!queue.empty()) {
      const auto s = queue.front();
      queue.pop_front();
      const auto r = s / n;
      const auto c = component[s];
      if (--pending[r * n + c] == 0) on_robber_node_won(r, c, sol.level_[s] + 1);
    }

    // Initial placement: cops choose C, robber picks any valid unoccupied vertex.
    std::uint64_t best_rank = 0;
    std::uint64_t best_worst = std::numeric_limits<std::uint64_t>::max();
    bool cops_win = false;
    for (std::uint64_t r = 0; r < multisets; ++r) {
      std::uint64_t worst = 0;
      bool all = true;
      for (Vertex v = 0; v < n; ++v) {
        const auto s = r * n + v;
        if (!sol.valid_[s]) continue;
        if (sol.level_[s] == GameSolution::kUnreached) {
          all = false;
          break;
        }
        worst = std::max<std::uint64_t>(worst, sol.level_[s]);
      }
      if (all && worst < best_worst) {
        best_worst = worst;
        best_rank = r;
        cops_win = true;
      }
    }
    sol.winner_ = cops_win ? Winner::Cops : Winner::Robber;
    sol.placement_ = idx.unrank(best_rank);
    return sol;
  }
};

inline GameSolution solve_fixed_k(const Graph& g, int k, const Limits& limits = {}) {
  if (!is_connected(g)) throw InputError("solve_fixed_k: graph must be connected");
  return GameSolver::solve(g, k, limits);
}

struct SolveResult {
  /// Least k with a cop win; unset when the budget ran out first.
  std::optional<int> cop_number;
  std::map<int, Winner> verdicts;
  /// Known bracket [lower, upper] on the cop number (upper may be unknown = -1).
  int lower = 1;
  int upper = -1;
  /// Solutions for the deciding k (cop win) and k−1 (robber win), when computed.
  std::shared_ptr<const GameSolution> winning;
  std::shared_ptr<const GameSolution> losing;
};

/// Least k with a cop win, ascending from k = 1. When the budget runs out the result
/// carries the bracket found so far; `throw_on_budget` turns that into a CapabilityError.
inline SolveResult cop_number_exact(const Graph& g, const Limits& limits = {}, std::optional<int> max_k = std::nullopt,
                                    bool throw_on_budget = true) {
  if (!is_connected(g)) throw InputError("cop_number_exact: graph must be connected");
  SolveResult out;
  const int n = g.vertex_count();
  const int k_cap = max_k.value_or(n);
  for (int k = 1; k <= k_cap; ++k) {
    if (GameSolver::state_estimate(n, k) > limits.state_budget) {
      if (throw_on_budget) {
        throw CapabilityError("cop_number_exact: budget exhausted at k=" + std::to_string(k) + "; bracket [" +
                              std::to_string(out.lower) + ", ?]");
      }
      return out;
    }
    auto sol = std::make_shared<const GameSolution>(GameSolver::solve(g, k, limits));
    out.verdicts[k] = sol->winner();
    if (sol->winner() == Winner::Cops) {
      out.cop_number = k;
      out.lower = out.upper = k;
      out.winning = std::move(sol);
      return out;
    }
    out.lower = k + 1;
    out.losing = std::move(sol);
  }
  return out;
}

}  // namespace copsrobber
