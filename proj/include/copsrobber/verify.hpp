#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "copsrobber/accessible.hpp"
#include "copsrobber/arena.hpp"
#include "copsrobber/bounds.hpp"
#include "copsrobber/decomposition.hpp"
#include "copsrobber/errors.hpp"
#include "copsrobber/game.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/graph.hpp"
#include "copsrobber/helicopter.hpp"
#include "copsrobber/interval.hpp"
#include "copsrobber/strategies.hpp"

namespace copsrobber {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct NamedIntervalGraph {
  std::string name;
  IntervalGraph data;
};

// ---------------------------------------------------------------------------
// Corpora

inline std::vector<Graph> connected_corpus(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = all_connected_graphs(n);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

inline std::vector<NamedGraph> named_instances(int max_n) {
  std::vector<NamedGraph> all;
  for (int n = 2; n <= 9; ++n) all.push_back({"K" + std::to_string(n), complete_graph(n)});
  for (int n = 8; n <= 9; ++n) {
    all.push_back({"P" + std::to_string(n), path_graph(n)});
    all.push_back({"C" + std::to_string(n), cycle_graph(n)});
    all.push_back({"star" + std::to_string(n), star_graph(n)});
    all.push_back({"wheel" + std::to_string(n), wheel_graph(n)});
  }
  all.push_back({"K3,3", complete_bipartite(3, 3)});
  all.push_back({"K4,4", complete_bipartite(4, 4)});
  all.push_back({"K4,5", complete_bipartite(4, 5)});
  all.push_back({"sun3", sun3()});
  all.push_back({"Q3", hypercube(3)});
  all.push_back({"grid2x4", grid(2, 4)});
  all.push_back({"grid3", grid(3)});
  all.push_back({"K3xK3", cartesian_product({{complete_graph(3), complete_graph(3)}, ProductKind::Cartesian})});
  all.push_back({"access2", chordal_accessible(2).graph});
  std::vector<NamedGraph> out;
  for (auto& g : all)
    if (g.graph.vertex_count() <= max_n) out.push_back(std::move(g));
  return out;
}

/// Strong products P_{3m} ⊠ K_m for m ≤ 3 and seeded random interval graphs.
inline std::vector<NamedIntervalGraph> interval_corpus(int min_random_n, int max_random_n, int seeds_per_n,
                                                       bool with_products = true) {
  std::vector<NamedIntervalGraph> out;
  if (with_products)
    for (int m = 1; m <= 3; ++m) out.push_back({"strong_product(P" + std::to_string(3 * m) + ",K" + std::to_string(m) + ")",
                                                strong_product_path_clique(m)});
  for (int n = min_random_n; n <= max_random_n; ++n)
    for (int s = 0; s < seeds_per_n; ++s) {
      const std::uint64_t seed = 1000 * n + s;
      out.push_back({"random_interval(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")",
                     random_interval_graph(n, seed)});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Independent helpers used by several checks

/// Inclusion-minimal vertex sets whose removal disconnects g, by enumeration of all subsets.
inline std::set<Mask> exhaustive_minimal_cutsets(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw CapabilityError("exhaustive_minimal_cutsets: n > 20");
  std::vector<char> separates(std::size_t{1} << n, 0);
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    const Mask rest = g.all_mask() & ~s;
    if (std::popcount(rest) < 2) continue;
    separates[s] = component_mask(g, std::countr_zero(rest), rest) != rest;
  }
  std::set<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (!separates[s]) continue;
    bool minimal = true;
    for_each_bit(s, [&](Vertex v) { minimal = minimal && !separates[s & ~bit(v)]; });
    if (minimal) out.insert(s);
  }
  return out;
}

/// Every minimum dominating set of g, by enumeration of all subsets of size γ.
inline std::vector<Mask> all_minimum_dominating_sets(const Graph& g, int gamma) {
  std::vector<Mask> out;
  const int n = g.vertex_count();
  std::function<void(int, int, Mask)> rec = [&](int start, int left, Mask chosen) {
    if (left == 0) {
      if (closed_neighborhood_mask(g, chosen) == g.all_mask()) out.push_back(chosen);
      return;
    }
    for (int v = start; v <= n - left; ++v) rec(v + 1, left - 1, chosen | bit(v));
  };
  rec(0, gamma, 0);
  return out;
}

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << "s";
  return out.str();
}

inline int exact_cop_number(const Graph& g, const Limits& limits) {
  return *cop_number_exact(g, limits).cop_number;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Criteria

inline CheckResult criterion_1(const Limits& limits = {}) {
  detail::Stopwatch clock;
  CheckResult r{1, "exact solver sanity", true, ""};
  std::ostringstream bad;
  int checked = 0;
  auto expect = [&](const std::string& name, const Graph& g, int value) {
    ++checked;
    const int c = detail::exact_cop_number(g, limits);
    if (c != value) {
      r.passed = false;
      bad << " " << name << ":c=" << c << "!=" << value;
    }
  };
  for (int n = 1; n <= 6; ++n) expect("K" + std::to_string(n), complete_graph(n), 1);
  for (int n = 1; n <= 8; ++n) expect("P" + std::to_string(n), path_graph(n), 1);
  int trees = 0;
  for (int n = 1; n <= 8; ++n)
    for (const auto& t : all_trees(n)) {
      expect("tree" + std::to_string(n) + "#" + std::to_string(trees), t, 1);
      ++trees;
    }
  for (int n = 4; n <= 8; ++n) expect("C" + std::to_string(n), cycle_graph(n), 2);
  const double t = clock.seconds();
  if (t >= 5.0) r.passed = false;
  r.detail = std::to_string(checked) + " graphs (" + std::to_string(trees) + " trees), time " + detail::fmt_seconds(t) +
             (r.passed ? "" : "; failures:" + bad.str());
  return r;
}

inline CheckResult criterion_2(const Limits& limits = {}) {
  detail::Stopwatch clock;
  CheckResult r{2, "treewidth sandwich ceil((tw+1)/(D+1)) <= c <= tw+1", true, ""};
  std::vector<NamedGraph> corpus;
  for (auto& g : connected_corpus(7)) corpus.push_back({"n" + std::to_string(g.vertex_count()), std::move(g)});
  for (auto& g : named_instances(9)) corpus.push_back(std::move(g));
  int violations = 0, tight_lower = 0, tight_upper = 0;
  std::string first_violation;
  for (const auto& [name, g] : corpus) {
    const int tw = treewidth_exact(g, limits).treewidth;
    const int delta = g.max_degree();
    const int lo = (tw + 1 + delta) / (delta + 1);
    const int c = detail::exact_cop_number(g, limits);
    if (c < lo || c > tw + 1) {
      if (violations++ == 0) first_violation = name + " tw=" + std::to_string(tw) + " c=" + std::to_string(c);
    }
    tight_lower += c == lo;
    tight_upper += c == tw + 1;
  }
  const double t = clock.seconds();
  r.passed = violations == 0 && t < 600.0;
  r.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(violations) + " violations, lower tight on " +
             std::to_string(tight_lower) + ", upper tight on " + std::to_string(tight_upper) + ", time " +
             detail::fmt_seconds(t) + (first_violation.empty() ? "" : "; first: " + first_violation);
  return r;
}

inline CheckResult criterion_3(const Limits& limits = {}) {
  CheckResult r{3, "tightness witnesses", true, ""};
  std::ostringstream d;
  for (int n = 2; n <= 6; ++n) {
    const auto g = complete_graph(n);
    const int c = detail::exact_cop_number(g, limits);
    const int tw = treewidth_exact(g, limits).treewidth;
    const int lo = (tw + 1 + g.max_degree()) / (g.max_degree() + 1);
    if (c != 1 || tw != n - 1 || lo != 1) r.passed = false;
  }
  d << "K2..K6: c=1=lower, tw=n-1";

  const auto theta3 = theta_family(3);
  Limits wide_limits = limits;
  wide_limits.treewidth = std::max(limits.treewidth, theta3.vertex_count());
  const int c3 = detail::exact_cop_number(theta3, limits);
  const int tw3 = treewidth_exact(theta3, wide_limits).treewidth;
  d << "; theta3: c=" << c3 << " (want 3), tw=" << tw3 << " (want 3)";
  if (c3 != 3 || tw3 != 3) r.passed = false;

  const auto theta4 = theta_family(4);
  constexpr int kRounds = 10000;
  auto sol = std::make_shared<const GameSolution>(GameSolver::solve(theta4, 3, limits));
  std::vector<std::pair<std::string, std::unique_ptr<CopPolicy>>> opponents;
  opponents.emplace_back("optimal", std::make_unique<OptimalCopPolicy>(sol));
  opponents.emplace_back("greedy", std::make_unique<GreedyCopPolicy>());
  opponents.emplace_back("random(4)", std::make_unique<RandomCopPolicy>(4));
  opponents.emplace_back("random(5)", std::make_unique<RandomCopPolicy>(5));
  d << "; theta4 vs 3 cops (solver says " << to_string(sol->winner()) << "):";
  for (auto& [label, cop] : opponents) {
    ThetaEvaderPolicy evader(4);
    const auto game = play(theta4, 3, *cop, evader, kRounds);
    d << " " << label << "=" << game.outcome.to_string();
    if (game.outcome.captured) r.passed = false;
  }
  r.detail = d.str();
  return r;
}

inline CheckResult criterion_4(const Limits& limits = {}) {
  detail::Stopwatch clock;
  CheckResult r{4, "interval approximation w <= c <= 3w", true, ""};
  const auto corpus = interval_corpus(1, 12, 3);
  int violations = 0;
  std::string first;
  for (const auto& [name, ig] : corpus) {
    const int w = compute_w(ig.graph, ig.representation).w;
    const int c = detail::exact_cop_number(ig.graph, limits);
    if (w > c || c > 3 * w) {
      if (violations++ == 0) first = name + " w=" + std::to_string(w) + " c=" + std::to_string(c);
    }
  }
  const auto sp2 = strong_product_path_clique(2);
  const int w2 = compute_w(sp2.graph, sp2.representation).w;
  const int c2 = detail::exact_cop_number(sp2.graph, limits);
  const double t = clock.seconds();
  r.passed = violations == 0 && w2 == 2 && c2 == 2 && t < 300.0;
  r.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(violations) + " violations; P6xK2: w=" +
             std::to_string(w2) + " c=" + std::to_string(c2) + "; time " + detail::fmt_seconds(t) +
             (first.empty() ? "" : "; first: " + first);
  return r;
}

inline CheckResult criterion_5(const Limits& limits = {}) {
  CheckResult r{5, "interval structure lemmas", true, ""};
  int cut_graphs = 0, cut_mismatch = 0, dom_graphs = 0, dom_mismatch = 0, sets = 0, structure_bad = 0;
  for (const auto& [name, ig] : interval_corpus(1, 14, 3, false)) {
    const auto& g = ig.graph;
    const auto sl = slice_sequence(ig.representation);
    if (g.vertex_count() <= 12) {
      ++cut_graphs;
      std::set<Mask> from_slices;
      for (int i : minimal_cutset_slices(ig.representation, sl)) from_slices.insert(sl.slices[i].to_mask());
      if (from_slices != exhaustive_minimal_cutsets(g)) ++cut_mismatch;
    }
    ++dom_graphs;
    const int gamma = domination_number_exact(g, limits);
    const auto greedy = domination_greedy_interval(ig.representation, sl, 0, sl.length() - 1);
    if (static_cast<int>(greedy.size()) != gamma || !is_dominating(g, greedy)) ++dom_mismatch;
    for (Mask a : all_minimum_dominating_sets(g, gamma)) {
      ++sets;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int inside = std::popcount(g.closed_mask(v) & ~bit(v) & a);
        if ((a & bit(v)) ? inside > 2 : inside > 5) {
          ++structure_bad;
          break;
        }
      }
    }
  }
  r.passed = cut_mismatch == 0 && dom_mismatch == 0 && structure_bad == 0;
  r.detail = "minimal cut-sets: " + std::to_string(cut_graphs) + " graphs, " + std::to_string(cut_mismatch) +
             " mismatches; greedy domination: " + std::to_string(dom_graphs) + " graphs, " +
             std::to_string(dom_mismatch) + " mismatches; structure: " + std::to_string(sets) +
             " minimum dominating sets, " + std::to_string(structure_bad) + " violations";
  return r;
}

inline CheckResult criterion_6(const Limits& limits = {}) {
  detail::Stopwatch clock;
  CheckResult r{6, "chordal accessible-pair construction", true, ""};
  const auto a2 = chordal_accessible(2, limits);
  const auto rep2 = verify_accessible_pair(a2.graph, a2.x, a2.v, limits);
  const auto a4 = chordal_accessible(4, limits);
  const bool chordal4 = is_chordal(a4.graph).chordal;
  const bool structure4 = check_accessible_structure(a4);
  const auto three = GameSolver::solve(a4.graph, 3, limits);
  const double t = clock.seconds();
  r.passed = a2.graph.vertex_count() == 7 && rep2.ok() && a4.graph.vertex_count() == 25 && chordal4 && structure4 &&
             three.winner() == Winner::Robber && t < 120.0;
  r.detail = "order 2: n=" + std::to_string(a2.graph.vertex_count()) + " accessible=" + (rep2.ok() ? "yes" : "no") +
             "; order 4: n=" + std::to_string(a4.graph.vertex_count()) + " chordal=" + (chordal4 ? "yes" : "no") +
             " structure=" + (structure4 ? "ok" : "bad") + " 3 cops: " + to_string(three.winner()) + " wins; time " +
             detail::fmt_seconds(t);
  return r;
}

inline CheckResult criterion_7(const Limits& limits = {}) {
  CheckResult r{7, "helicopter = tw+1 and helicopter <= (D+1) c", true, ""};
  std::vector<Graph> corpus = connected_corpus(7);
  for (auto& g : named_instances(8)) corpus.push_back(std::move(g.graph));
  int identity_bad = 0, inequality_bad = 0;
  for (const auto& g : corpus) {
    const int heli = helicopter_min_cops(g, limits);
    const int tw = treewidth_exact(g, limits).treewidth;
    const int c = detail::exact_cop_number(g, limits);
    identity_bad += heli != tw + 1;
    inequality_bad += heli > (g.max_degree() + 1) * c;
  }
  r.passed = identity_bad == 0 && inequality_bad == 0;
  r.detail = std::to_string(corpus.size()) + " graphs; identity violations " + std::to_string(identity_bad) +
             ", inequality violations " + std::to_string(inequality_bad);
  return r;
}

inline CheckResult criterion_8(const Limits& limits = {}) {
  CheckResult r{8, "contraction monotonicity c(G/e) <= c(G)", true, ""};
  std::map<std::pair<int, std::uint64_t>, int> value;
  const auto corpus = connected_corpus(7);
  for (const auto& g : corpus) value[{g.vertex_count(), canonical_form(g).first}] = detail::exact_cop_number(g, limits);
  long long edges = 0, violations = 0;
  for (const auto& g : corpus) {
    const int c = value.at({g.vertex_count(), canonical_form(g).first});
    for (const auto& e : g.edges()) {
      ++edges;
      const Graph h = contract_edge(g, e);
      const auto it = value.find({h.vertex_count(), canonical_form(h).first});
      const int ch = it != value.end() ? it->second : detail::exact_cop_number(h, limits);
      violations += ch > c;
    }
  }
  r.passed = violations == 0;
  r.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(edges) + " contractions, " +
             std::to_string(violations) + " violations";
  return r;
}

inline CheckResult criterion_9(const Limits& limits = {}) {
  CheckResult r{9, "hypercube domination and cop bounds", true, ""};
  std::ostringstream d;
  const std::map<int, int> expected{{3, 2}, {4, 4}, {7, 16}};
  for (auto [m, size] : expected) {
    const auto set = hypercube_dominating_set(m);
    const bool dominating = is_dominating(hypercube(m), set);
    const double cap = std::pow(2.0, m + 1) / (m + 1);
    const bool ok = static_cast<int>(set.size()) == size && dominating && set.size() <= cap;
    r.passed = r.passed && ok;
    d << "Q" << m << ": |D|=" << set.size() << (dominating ? " dominating" : " NOT dominating") << " cap=" << cap << "; ";
  }
  const int c3 = detail::exact_cop_number(hypercube(3), limits);
  const auto q4 = cop_number_exact(hypercube(4), limits);
  const bool q4_lower = q4.verdicts.count(1) && q4.verdicts.at(1) == Winner::Robber;
  const bool q4_upper = is_dominating(hypercube(4), hypercube_dominating_set(4)) && *q4.cop_number <= 4;
  r.passed = r.passed && c3 == 2 && q4_lower && q4_upper;
  d << "c(Q3)=" << c3 << "; Q4: 1 cop " << (q4_lower ? "loses" : "wins") << ", exact c=" << *q4.cop_number << " <= 4";
  r.detail = d.str();
  return r;
}

inline CheckResult criterion_10(const Limits& limits = {}) {
  CheckResult r{10, "product lift c <= n c(G1)/n1", true, ""};
  std::ostringstream d;
  const std::vector<std::pair<std::string, ProductSpec>> cases{
      {"K2xK2", {{complete_graph(2), complete_graph(2)}, ProductKind::Cartesian}},
      {"K3xK3", {{complete_graph(3), complete_graph(3)}, ProductKind::Cartesian}},
      {"Q3", {{complete_graph(2), complete_graph(2), complete_graph(2)}, ProductKind::Cartesian}},
  };
  for (const auto& [name, spec] : cases) {
    const Graph g = cartesian_product(spec);
    const Graph& g1 = spec.factors.front();
    const auto factor = cop_number_exact(g1, limits);
    const int c1 = *factor.cop_number;
    const int k = c1 * (g.vertex_count() / g1.vertex_count());
    const int c = detail::exact_cop_number(g, limits);
    auto robber_sol = std::make_shared<const GameSolution>(GameSolver::solve(g, k, limits));
    std::vector<std::unique_ptr<RobberPolicy>> robbers;
    robbers.push_back(std::make_unique<OptimalRobberPolicy>(robber_sol));
    robbers.push_back(std::make_unique<GreedyRobberPolicy>());
    robbers.push_back(std::make_unique<RandomRobberPolicy>(10));
    bool all_captured = true;
    for (auto& robber : robbers) {
      ProductLiftCopPolicy cops(spec, std::make_unique<OptimalCopPolicy>(factor.winning), c1);
      all_captured = all_captured && play(g, k, cops, *robber, 100).outcome.captured;
    }
    const bool ok = all_captured && c <= upper_bound_product(spec, c1);
    r.passed = r.passed && ok;
    d << (name == cases.front().first ? "" : "; ") << name << ": k=" << k << " c=" << c
      << (all_captured ? " captured" : " ESCAPED");
  }
  r.detail = d.str();
  return r;
}

inline CheckResult criterion_11(const Limits& = {}) {
  CheckResult r{11, "wideness w <= sqrt(5n)+3", true, ""};
  auto corpus = interval_corpus(1, 30, 2);
  int violations = 0;
  double worst = -1e9;
  for (const auto& [name, ig] : corpus) {
    const int w = compute_w(ig.graph, ig.representation).w;
    const double slack = std::sqrt(5.0 * ig.graph.vertex_count()) + 3.0 - w;
    worst = worst < -1e8 ? slack : std::min(worst, slack);
    violations += slack < 0;
  }
  r.passed = violations == 0;
  std::ostringstream d;
  d.precision(3);
  d << corpus.size() << " graphs up to n=30, " << violations << " violations, least slack " << worst;
  r.detail = d.str();
  return r;
}

// ---------------------------------------------------------------------------
// Suites

inline const std::map<std::string, std::vector<int>>& verification_suites() {
  static const std::map<std::string, std::vector<int>> suites{
      {"treewidth", {2, 3}},  {"helicopter", {7}},  {"interval", {4, 5, 11}}, {"chordal", {6}},
      {"products", {9, 10}},  {"contraction", {8}}, {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
  };
  return suites;
}

inline CheckResult run_criterion(int id, const Limits& limits = {}) {
  using Fn = CheckResult (*)(const Limits&);
  static const Fn table[] = {criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5, criterion_6,
                             criterion_7, criterion_8, criterion_9, criterion_10, criterion_11};
  if (id < 1 || id > 11) throw InputError("no criterion " + std::to_string(id));
  try {
    return table[id - 1](limits);
  } catch (const std::exception& e) {
    return {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
  }
}

inline std::string format_check(const CheckResult& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail;
}

}  // namespace copsrobber
