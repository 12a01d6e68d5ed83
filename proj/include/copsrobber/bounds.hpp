#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "copsrobber/decomposition.hpp"
#include "copsrobber/errors.hpp"
#include "copsrobber/game.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/graph.hpp"
#include "copsrobber/interval.hpp"
#include "copsrobber/wide.hpp"

namespace copsrobber {

enum class BoundKind { Lower, Upper };

inline const char* to_string(BoundKind k) { return k == BoundKind::Lower ? "lower" : "upper"; }

struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::Lower;
  bool applicable = false;
  int value = 0;
  std::string basis;        // the inequality this entry instantiates
  std::string certificate;  // witness data, or the reason it does not apply
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  int lo = 1;
  int hi = -1;  // -1 = no upper bound applied
  std::optional<int> exact;
};

struct BoundHints {
  std::optional<IntervalRepresentation> intervals;
  std::optional<ProductSpec> product;
  std::optional<TreeDecomposition> decomposition;
};

inline std::pair<int, int> bounds_treewidth(const Graph& g, const Limits& limits = {}) {
  const int tw = treewidth_exact(g, limits).treewidth;
  const int delta = g.max_degree();
  return {(tw + 1 + delta) / (delta + 1), tw + 1};
}

inline int upper_bound_domination(const Graph& g, const Limits& limits = {}) {
  return domination_number_exact(g, limits);
}

/// ⌈n · c∞(G1) / n1⌉ for a Cartesian product whose first factor is G1.
inline int upper_bound_product(const ProductSpec& spec, int factor_cop_number) {
  if (spec.factors.empty()) throw InputError("upper_bound_product: empty factor list");
  const std::int64_t n = spec.vertex_count();
  const std::int64_t n1 = spec.factors.front().vertex_count();
  return static_cast<int>((n * factor_cop_number + n1 - 1) / n1);
}

struct HypercubeBracket {
  int m = 0;
  int lower = 1;
  int upper = 0;
  std::optional<int> treewidth;
  std::string lower_formula;
  std::string upper_formula;
};

/// Finite instantiation of the hypercube bounds: lower ⌈(tw(Q_m)+1)/(m+1)⌉ with exact
/// treewidth for m ≤ 4, upper |hypercube_dominating_set(m)|.
inline HypercubeBracket hypercube_bracket(int m, const Limits& limits = {}) {
  HypercubeBracket out;
  out.m = m;
  out.upper = static_cast<int>(hypercube_dominating_set(m).size());
  out.upper_formula = "|Hamming/doubling dominating set of Q_m|";
  if (m <= 4) {
    out.treewidth = treewidth_exact(hypercube(m), limits).treewidth;
    out.lower = (*out.treewidth + 1 + m) / (m + 1);
    out.lower_formula = "ceil((tw(Q_m)+1)/(m+1))";
  } else {
    out.lower = 1;
    out.lower_formula = "1 (treewidth of Q_m not computed exactly for m > 4)";
  }
  return out;
}

namespace detail {

inline std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace detail

/// Runs every applicable bound in a fixed order and returns the bracket. Inapplicable
/// bounds stay in the report with the reason. When `check_exact` is set and the solver fits
/// the budget, the exact cop number is computed and must lie in the bracket.
inline BoundReport compose(const Graph& g, const BoundHints& hints = {}, const Limits& limits = {},
                           bool check_exact = true) {
  if (!is_connected(g)) throw InputError("compose: graph must be connected");
  BoundReport rep;
  const int n = g.vertex_count();
  auto add = [&](BoundEntry e) { rep.entries.push_back(std::move(e)); };

  add({"trivial", BoundKind::Lower, true, 1, "c >= 1", "nonempty graph"});

  {
    BoundEntry e{"wide-subgraph", BoundKind::Lower, false, 0, "k-wide induced subgraph => c >= k", ""};
    if (n <= limits.wideness) {
      const auto w = lower_bound_wide(g, limits);
      e.applicable = true;
      e.value = w.k;
      e.certificate = "H=" + detail::set_text(w.subgraph);
    } else {
      e.certificate = "n=" + std::to_string(n) + " exceeds the exhaustive wideness limit " + std::to_string(limits.wideness);
    }
    add(std::move(e));
  }

  {
    BoundEntry lo{"treewidth-lower", BoundKind::Lower, false, 0, "c >= ceil((tw+1)/(Delta+1))", ""};
    BoundEntry hi{"treewidth-upper", BoundKind::Upper, false, 0, "c <= tw+1", ""};
    if (n <= limits.treewidth) {
      const auto tw = treewidth_exact(g, limits);
      const int delta = g.max_degree();
      lo.applicable = hi.applicable = true;
      lo.value = (tw.treewidth + 1 + delta) / (delta + 1);
      hi.value = tw.treewidth + 1;
      lo.certificate = "tw=" + std::to_string(tw.treewidth) + " Delta=" + std::to_string(delta);
      hi.certificate = "tw=" + std::to_string(tw.treewidth) + " (witness decomposition validated)";
    } else if (hints.decomposition && validate_tree_decomposition(g, *hints.decomposition)) {
      hi.applicable = true;
      hi.value = hints.decomposition->width() + 1;
      hi.certificate = "supplied decomposition of width " + std::to_string(hints.decomposition->width());
      lo.certificate = "exact treewidth unavailable: n exceeds limit " + std::to_string(limits.treewidth);
    } else {
      lo.certificate = hi.certificate = "n=" + std::to_string(n) + " exceeds the treewidth limit " +
                                        std::to_string(limits.treewidth) + " and no valid decomposition was supplied";
    }
    add(std::move(lo));
    add(std::move(hi));
  }

  {
    BoundEntry e{"domination", BoundKind::Upper, false, 0, "c <= gamma", ""};
    if (n <= limits.domination) {
      const auto d = minimum_dominating_set(g, limits);
      e.applicable = true;
      e.value = static_cast<int>(d.size());
      e.certificate = "D=" + detail::set_text(d);
    } else {
      e.certificate = "n=" + std::to_string(n) + " exceeds the domination limit " + std::to_string(limits.domination);
    }
    add(std::move(e));
  }

  {
    BoundEntry lo{"interval-w", BoundKind::Lower, false, 0, "c >= w(G)", "no interval representation supplied"};
    BoundEntry hi{"interval-3w", BoundKind::Upper, false, 0, "c <= 3 w(G)", "no interval representation supplied"};
    if (hints.intervals) {
      const auto r = compute_w(g, *hints.intervals);
      lo.applicable = hi.applicable = true;
      lo.value = r.w;
      hi.value = 3 * r.w;
      lo.certificate = hi.certificate = "w(G)=" + std::to_string(r.w) + " on G[" + std::to_string(r.certificate.a) +
                                        "," + std::to_string(r.certificate.b) + "]";
    }
    add(std::move(lo));
    add(std::move(hi));
  }

  {
    BoundEntry e{"product", BoundKind::Upper, false, 0, "c <= n c(G1) / n1", "no product structure supplied"};
    if (hints.product) {
      if (!(product(*hints.product) == g) || hints.product->kind != ProductKind::Cartesian) {
        throw InputError("compose: graph is not the supplied Cartesian product");
      }
      const auto& g1 = hints.product->factors.front();
      const auto factor = cop_number_exact(g1, limits);
      e.applicable = true;
      e.value = upper_bound_product(*hints.product, *factor.cop_number);
      e.certificate = "c(G1)=" + std::to_string(*factor.cop_number) + " n1=" + std::to_string(g1.vertex_count());
    }
    add(std::move(e));
  }

  {
    BoundEntry e{"theta", BoundKind::Lower, false, 0, "theta_family(m) => c >= m", "not a theta-family graph"};
    if (const int m = detect_theta(g); m > 0) {
      e.applicable = true;
      e.value = m;
      e.certificate = "m=" + std::to_string(m);
    }
    add(std::move(e));
  }

  for (const auto& e : rep.entries) {
    if (!e.applicable) continue;
    if (e.kind == BoundKind::Lower) rep.lo = std::max(rep.lo, e.value);
    else rep.hi = rep.hi < 0 ? e.value : std::min(rep.hi, e.value);
  }
  if (rep.hi >= 0 && rep.lo > rep.hi) {
    throw InternalError("compose: contradictory bracket [" + std::to_string(rep.lo) + ", " + std::to_string(rep.hi) + "]");
  }

  if (check_exact) {
    const auto solved = cop_number_exact(g, limits, rep.hi >= 0 ? std::optional<int>(rep.hi) : std::nullopt, false);
    if (solved.cop_number) {
      rep.exact = solved.cop_number;
      if (*rep.exact < rep.lo || (rep.hi >= 0 && *rep.exact > rep.hi)) {
        throw InternalError("compose: exact cop number " + std::to_string(*rep.exact) + " outside bracket [" +
                            std::to_string(rep.lo) + ", " + std::to_string(rep.hi) + "]");
      }
    }
  }
  return rep;
}

}  // namespace copsrobber
