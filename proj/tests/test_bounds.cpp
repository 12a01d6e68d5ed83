#include <catch_amalgamated.hpp>

#include "copsrobber/bounds.hpp"
#include "copsrobber/generators.hpp"

using namespace copsrobber;

namespace {

const BoundEntry& entry(const BoundReport& r, const std::string& name, BoundKind kind) {
  for (const auto& e : r.entries)
    if (e.name == name && e.kind == kind) return e;
  throw std::runtime_error("missing entry " + name);
}

}  // namespace

TEST_CASE("treewidth bounds") {
  CHECK(bounds_treewidth(complete_graph(5)) == std::pair{1, 5});
  CHECK(bounds_treewidth(hypercube(3)) == std::pair{1, 4});
  Limits wide;
  wide.treewidth = 21;
  CHECK(bounds_treewidth(theta_family(3), wide).second == treewidth_exact(theta_family(3), wide).treewidth + 1);
}

TEST_CASE("domination and product upper bounds") {
  CHECK(upper_bound_domination(complete_graph(6)) == 1);
  CHECK(upper_bound_domination(hypercube(3)) == 2);
  CHECK(upper_bound_domination(cycle_graph(6)) == 2);
  const ProductSpec q3{{complete_graph(2), complete_graph(2), complete_graph(2)}, ProductKind::Cartesian};
  CHECK(upper_bound_product(q3, 1) == 4);
  CHECK(upper_bound_product({{complete_graph(3), complete_graph(3)}, ProductKind::Cartesian}, 1) == 3);
  const ProductSpec q4{{complete_graph(2), hypercube(3)}, ProductKind::Cartesian};
  CHECK(upper_bound_product(q4, 1) == 8);
}

TEST_CASE("hypercube brackets") {
  const auto b3 = hypercube_bracket(3);
  CHECK(b3.lower == 1);
  CHECK(b3.upper == 2);
  CHECK(b3.treewidth == 3);
  const auto b4 = hypercube_bracket(4);
  CHECK(b4.treewidth == 6);
  CHECK(b4.lower == 2);
  CHECK(b4.upper == 4);
  CHECK(b4.treewidth.has_value());
  const auto b7 = hypercube_bracket(7);
  CHECK(b7.upper == 16);
  CHECK_FALSE(b7.treewidth.has_value());
}

TEST_CASE("compose brackets the exact value") {
  const auto k5 = compose(complete_graph(5));
  CHECK(k5.lo == 1);
  CHECK(k5.hi == 1);
  CHECK(k5.exact == 1);

  const auto q3 = compose(hypercube(3));
  CHECK(entry(q3, "domination", BoundKind::Upper).value == 2);
  CHECK(entry(q3, "treewidth-upper", BoundKind::Upper).value == 4);
  CHECK(q3.lo <= 2);
  CHECK(q3.hi == 2);
  CHECK(q3.exact == 2);

  Limits wide;
  wide.treewidth = 21;
  wide.wideness = 12;
  const auto theta = compose(theta_family(3), {}, wide);
  CHECK(entry(theta, "theta", BoundKind::Lower).value == 3);
  CHECK(theta.lo == 3);
  CHECK(theta.exact == 3);
  CHECK(theta.hi >= 3);
}

TEST_CASE("interval hints add the w and 3w entries") {
  const auto ig = strong_product_path_clique(2);
  BoundHints hints;
  hints.intervals = ig.representation;
  const auto r = compose(ig.graph, hints);
  const auto& w = entry(r, "interval-w", BoundKind::Lower);
  CHECK(w.applicable);
  CHECK(w.value == 2);
  CHECK(w.certificate.find("w(G)=2") != std::string::npos);
  CHECK(entry(r, "interval-3w", BoundKind::Upper).value == 6);
  CHECK(r.lo == 2);
  CHECK(r.exact == 2);
}

TEST_CASE("inapplicable bounds stay in the report with a reason") {
  const auto r = compose(cycle_graph(5));
  const auto& p = entry(r, "product", BoundKind::Upper);
  CHECK_FALSE(p.applicable);
  CHECK_FALSE(p.certificate.empty());
  CHECK_FALSE(entry(r, "theta", BoundKind::Lower).applicable);
  CHECK(r.entries.size() == 9);

  Limits tight;
  tight.wideness = 3;
  tight.treewidth = 3;
  tight.domination = 3;
  const auto small = compose(cycle_graph(5), {}, tight);
  CHECK_FALSE(entry(small, "treewidth-upper", BoundKind::Upper).applicable);
  CHECK(small.hi == -1);
  CHECK(small.exact == 2);
}

TEST_CASE("every corpus bound brackets the exact cop number") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_connected_graphs(n)) {
      const auto r = compose(g);
      REQUIRE(r.exact.has_value());
      for (const auto& e : r.entries) {
        if (!e.applicable) continue;
        if (e.kind == BoundKind::Lower) REQUIRE(e.value <= *r.exact);
        else REQUIRE(*r.exact <= e.value);
      }
    }
}

TEST_CASE("grid treewidth to cop number ratio") {
  for (int r = 2; r <= 4; ++r) {
    const Graph g = grid(r);
    const int c = *cop_number_exact(g).cop_number;
    const double ratio = static_cast<double>(treewidth_exact(g).treewidth + 1) / c;
    CHECK(ratio >= 1.0);
    CHECK(ratio <= 5.0);
  }
}

TEST_CASE("compose rejects inconsistent inputs") {
  CHECK_THROWS_AS(compose(Graph(3, {{0, 1}})), InputError);
  BoundHints hints;
  hints.product = ProductSpec{{complete_graph(2), complete_graph(2)}, ProductKind::Cartesian};
  CHECK_THROWS_AS(compose(cycle_graph(5), hints), InputError);
  CHECK(entry(compose(cartesian_product(*hints.product), hints), "product", BoundKind::Upper).value == 2);
}
