#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "copsrobber/decomposition.hpp"
#include "copsrobber/errors.hpp"
#include "copsrobber/game.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/graph.hpp"

namespace copsrobber {

/// Graph with an accessible pair (X, v). Composite instances record the two halves they
/// were glued from: vertex ids are laid out as [V1 | U1 | X | U2 | V2 | v], where V_j is
/// child j without its own v_j.
struct AccessiblePairData {
  struct Composite {
    std::shared_ptr<const AccessiblePairData> child[2];
    std::vector<Vertex> embed[2];  // child vertex → parent vertex; child's v maps to -1
    VertexSet u[2];
  };

  Graph graph;
  VertexSet x;
  Vertex v = -1;
  std::optional<Composite> composite;

  int order() const { return static_cast<int>(x.size()); }
};

/// g plus a reserve vertex (id n) adjacent only to v.
inline Graph with_reserve(const Graph& g, Vertex v) {
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(v, g.vertex_count());
  return Graph(g.vertex_count() + 1, std::move(edges));
}

/// Restricted game behind accessibility: the robber may end her moves only outside
/// X ∪ {v} (and off the reserve vertex, if present) and must then still see a cop-free
/// vertex of X in her component.
inline GameSolution solve_accessibility_game(const Graph& g, const VertexSet& x, Vertex v, int cops, bool reserve,
                                             const Limits& limits = {}) {
  const Graph game_graph = reserve ? with_reserve(g, v) : g;
  RobberConstraint rc;
  rc.allowed.assign(game_graph.vertex_count(), 1);
  for (Vertex u : x) rc.allowed[u] = 0;
  rc.allowed[v] = 0;
  if (reserve) rc.allowed[g.vertex_count()] = 0;
  const std::vector<Vertex> xs(x.begin(), x.end());
  rc.side_condition = [xs](const CopMultiset&, const std::vector<std::uint8_t>& comp, Vertex r) {
    for (Vertex u : xs)
      if (comp[u] != 255 && comp[u] == comp[r]) return true;
    return false;
  };
  return GameSolver::solve(game_graph, cops, limits, rc);
}

struct AccessibilityReport {
  bool neighbourhood_ok = false;
  bool chordal = false;
  bool cop_lower_bound_ok = false;  // |X|−1 cops lose the ordinary game
  bool access_ok = false;           // |X|−1 cops lose the restricted game
  bool ok() const { return neighbourhood_ok && chordal && cop_lower_bound_ok && access_ok; }
};

/// Machine check of the three accessibility conditions plus chordality.
inline AccessibilityReport verify_accessible_pair(const Graph& g, const VertexSet& x, Vertex v, const Limits& limits = {}) {
  AccessibilityReport rep;
  rep.neighbourhood_ok = VertexSet(std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end())) == x;
  rep.chordal = is_chordal(g).chordal;
  if (!rep.neighbourhood_ok || x.empty()) return rep;
  const int k = static_cast<int>(x.size()) - 1;
  rep.cop_lower_bound_ok = k == 0 || GameSolver::solve(g, k, limits).winner() == Winner::Robber;
  rep.access_ok = k == 0 || solve_accessibility_game(g, x, v, k, false, limits).winner() == Winner::Robber;
  return rep;
}

/// Seven-vertex base pair: the 3-sun (triangle 0,1,2; ears 3~{0,1}, 4~{1,2}, 5~{2,0}) with
/// v = 6 attached to X = {0,1}. Falls back to searching every connected chordal graph on
/// seven vertices if the candidate ever fails verification.
inline AccessiblePairData base_accessible_pair(const Limits& limits = {}) {
  AccessiblePairData out;
  std::vector<Edge> edges = sun3().edges();
  edges.emplace_back(0, 6);
  edges.emplace_back(1, 6);
  out.graph = Graph(7, std::move(edges));
  out.x = VertexSet{0, 1};
  out.v = 6;
  if (verify_accessible_pair(out.graph, out.x, out.v, limits).ok()) return out;

  for (const auto& g : all_connected_graphs(7)) {
    if (!is_chordal(g).chordal) continue;
    for (Vertex v = 0; v < 7; ++v) {
      if (g.degree(v) != 2) continue;
      VertexSet x(std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end()));
      if (verify_accessible_pair(g, x, v, limits).ok()) return {g, x, v, std::nullopt};
    }
  }
  throw ConstructionError("base_accessible_pair: no verified seven-vertex pair");
}

/// Glues two pairs with |X_1| = |X_2| = k into one with |X| = 2k. U1, X, U2 are cliques of
/// size 2k joined completely to X_1–U1, U1–X, X–U2, U2–X_2, and v is joined to X.
inline AccessiblePairData compose_accessible(std::shared_ptr<const AccessiblePairData> g1,
                                             std::shared_ptr<const AccessiblePairData> g2) {
  const int k = g1->order();
  if (g2->order() != k) throw InputError("compose_accessible: halves need equal |X|");
  AccessiblePairData out;
  AccessiblePairData::Composite comp;
  comp.child[0] = std::move(g1);
  comp.child[1] = std::move(g2);
  int next = 0;
  auto embed_child = [&](int j) {
    const auto& c = *comp.child[j];
    comp.embed[j].assign(c.graph.vertex_count(), -1);
    for (Vertex u = 0; u < c.graph.vertex_count(); ++u)
      if (u != c.v) comp.embed[j][u] = next++;
  };
  auto block = [&]() {
    std::vector<Vertex> ids;
    for (int i = 0; i < 2 * k; ++i) ids.push_back(next++);
    return VertexSet(std::move(ids));
  };
  embed_child(0);
  comp.u[0] = block();
  out.x = block();
  comp.u[1] = block();
  embed_child(1);
  out.v = next++;

  std::vector<Edge> edges;
  auto clique = [&](const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) edges.emplace_back(s[i], s[j]);
  };
  auto join = [&](const VertexSet& a, const VertexSet& b) {
    for (Vertex p : a)
      for (Vertex q : b) edges.emplace_back(p, q);
  };
  for (int j = 0; j < 2; ++j) {
    const auto& c = *comp.child[j];
    for (auto [a, b] : c.graph.edges())
      if (a != c.v && b != c.v) edges.emplace_back(comp.embed[j][a], comp.embed[j][b]);
  }
  clique(comp.u[0]);
  clique(out.x);
  clique(comp.u[1]);
  std::vector<Vertex> x1, x2;
  for (Vertex u : comp.child[0]->x) x1.push_back(comp.embed[0][u]);
  for (Vertex u : comp.child[1]->x) x2.push_back(comp.embed[1][u]);
  join(VertexSet(x1), comp.u[0]);
  join(comp.u[0], out.x);
  join(out.x, comp.u[1]);
  join(comp.u[1], VertexSet(x2));
  join(VertexSet{out.v}, out.x);
  out.graph = Graph(next, std::move(edges));
  out.composite = std::move(comp);
  return out;
}

/// Chordal graph with an accessible pair of order m (a power of two, m ≥ 2), obtained by
/// repeated doubling from the base pair; vertex counts 7, 25, 73, ...
inline AccessiblePairData chordal_accessible(int m, const Limits& limits = {}) {
  if (m < 2 || (m & (m - 1)) != 0) throw InputError("chordal_accessible: m must be a power of two, m >= 2");
  if (m > 64) throw CapabilityError("chordal_accessible: m above 64 is not supported");
  auto current = std::make_shared<const AccessiblePairData>(base_accessible_pair(limits));
  for (int size = 2; size < m; size *= 2)
    current = std::make_shared<const AccessiblePairData>(compose_accessible(current, current));
  return *current;
}

/// Structural checks: N(v) = X, and for composites the block sizes, the four complete joins,
/// clique blocks, copies of the halves, and no further cross edges.
inline bool check_accessible_structure(const AccessiblePairData& d) {
  const auto& g = d.graph;
  if (VertexSet(std::vector<Vertex>(g.neighbors(d.v).begin(), g.neighbors(d.v).end())) != d.x) return false;
  if (!d.composite) return true;
  const auto& c = *d.composite;
  const auto k = static_cast<std::size_t>(c.child[0]->order());
  if (c.child[1]->order() != static_cast<int>(k)) return false;
  if (c.u[0].size() != 2 * k || d.x.size() != 2 * k || c.u[1].size() != 2 * k) return false;

  enum Part { V1, X1, U1, XX, U2, V2, X2, VV };
  std::vector<int> part(g.vertex_count(), -1);
  for (int j = 0; j < 2; ++j) {
    const auto& ch = *c.child[j];
    for (Vertex u = 0; u < ch.graph.vertex_count(); ++u) {
      if (u == ch.v) continue;
      part[c.embed[j][u]] = ch.x.contains(u) ? (j == 0 ? X1 : X2) : (j == 0 ? V1 : V2);
    }
  }
  for (Vertex u : c.u[0]) part[u] = U1;
  for (Vertex u : c.u[1]) part[u] = U2;
  for (Vertex u : d.x) part[u] = XX;
  part[d.v] = VV;
  for (int p : part)
    if (p < 0) return false;

  auto pair_allowed = [](int a, int b) {
    if (a > b) std::swap(a, b);
    return (a == X1 && b == U1) || (a == U1 && b == XX) || (a == XX && b == U2) || (a == U2 && b == X2) ||
           (a == XX && b == VV);
  };
  auto same_side = [](int p) { return p == V1 || p == X1 ? 0 : (p == V2 || p == X2 ? 1 : -1); };
  std::size_t cross = 0;
  for (auto [a, b] : g.edges()) {
    const int pa = part[a], pb = part[b];
    if (same_side(pa) >= 0 && same_side(pa) == same_side(pb)) continue;
    if (pa == pb) continue;
    if (!pair_allowed(pa, pb)) return false;
    ++cross;
  }
  // X1–U1 and U2–X2 give 2k² each, U1–X and X–U2 give 4k² each, v–X gives 2k.
  if (cross != 12 * k * k + 2 * k) return false;
  for (Vertex a : c.u[0])
    for (Vertex b : c.u[0])
      if (a < b && !g.adjacent(a, b)) return false;
  for (Vertex a : c.u[1])
    for (Vertex b : c.u[1])
      if (a < b && !g.adjacent(a, b)) return false;
  for (Vertex a : d.x)
    for (Vertex b : d.x)
      if (a < b && !g.adjacent(a, b)) return false;
  for (int j = 0; j < 2; ++j) {
    const auto& ch = *c.child[j];
    std::size_t kept = 0;
    for (auto [a, b] : ch.graph.edges()) {
      if (a == ch.v || b == ch.v) continue;
      if (!g.adjacent(c.embed[j][a], c.embed[j][b])) return false;
      ++kept;
    }
    std::size_t inside = 0;
    for (auto [a, b] : g.edges())
      if (same_side(part[a]) == j && same_side(part[b]) == j) ++inside;
    if (inside != kept) return false;
  }
  return check_accessible_structure(*c.child[0]) && check_accessible_structure(*c.child[1]);
}

}  // namespace copsrobber
