#include <catch_amalgamated.hpp>

#include <set>

#include "copsrobber/game.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/interval.hpp"
#include "copsrobber/verify.hpp"
#include "copsrobber/wide.hpp"
#include "oracles.hpp"

using namespace copsrobber;

TEST_CASE("rationals parse and compare exactly") {
  CHECK(Rational::parse("7/4") == Rational::parse("1.75"));
  CHECK(Rational::parse("-3.25") < Rational::parse("-3"));
  CHECK(Rational::parse("12").to_string() == "12");
  CHECK((Rational::parse("1/3") + Rational::parse("1/6")) == Rational::parse("1/2"));
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("abc"), InputError);
}

TEST_CASE("slices sample between consecutive endpoints") {
  IntervalRepresentation rep{{{Rational(0), Rational(2)}, {Rational(1), Rational(4)}, {Rational(3), Rational(5)}}};
  const auto sl = slice_sequence(rep);
  REQUIRE(sl.length() == 5);
  CHECK(sl.slices[0] == VertexSet{0});
  CHECK(sl.slices[1] == VertexSet{0, 1});
  CHECK(sl.slices[2] == VertexSet{1});
  CHECK(sl.slices[3] == VertexSet{1, 2});
  CHECK(cut_point_slices(rep, sl) == std::vector<int>{2});
  CHECK(rep.intersection_graph() == path_graph(3));
}

TEST_CASE("shared endpoints are rejected with a hint") {
  IntervalRepresentation rep{{{Rational(0), Rational(2)}, {Rational(2), Rational(4)}}};
  CHECK_THROWS_AS(slice_sequence(rep), InputError);
}

TEST_CASE("minimal cut-set slices are exactly the minimal cut-sets") {
  for (int n = 2; n <= 12; ++n)
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto ig = random_interval_graph(n, seed);
      const auto sl = slice_sequence(ig.representation);
      std::set<Mask> from_slices;
      for (int i : minimal_cutset_slices(ig.representation, sl)) from_slices.insert(sl.slices[i].to_mask());
      REQUIRE(from_slices == exhaustive_minimal_cutsets(ig.graph));
    }
}

TEST_CASE("greedy interval domination is optimal on every interval subgraph") {
  for (int n = 2; n <= 11; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto ig = random_interval_graph(n, seed);
      const auto sl = slice_sequence(ig.representation);
      for (int a = 0; a < sl.length(); ++a)
        for (int b = a; b < sl.length(); ++b) {
          const auto h = sl.range_vertices(a, b);
          const auto greedy = domination_greedy_interval(ig.representation, sl, a, b);
          const Graph sub = induced_subgraph(ig.graph, h);
          REQUIRE(static_cast<int>(greedy.size()) == oracle::domination(sub));
          REQUIRE(static_cast<int>(greedy.size()) == oracle::domination(ig.graph, h.to_mask()));
        }
    }
}

TEST_CASE("interval wideness matches the general wideness computation") {
  for (int n = 3; n <= 10; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto ig = random_interval_graph(n, seed);
      const auto sl = slice_sequence(ig.representation);
      for (int a = 0; a < sl.length(); ++a)
        for (int b = a; b < sl.length(); ++b) {
          const auto cert = interval_subgraph_wideness(ig.representation, sl, a, b);
          if (!is_connected(induced_subgraph(ig.graph, cert.vertices))) continue;
          REQUIRE(cert.wideness == wideness_of(ig.graph, cert.vertices));
        }
    }
}

TEST_CASE("minimum dominating sets of interval graphs are locally sparse") {
  for (int n = 3; n <= 12; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto ig = random_interval_graph(n, seed);
      const Graph& g = ig.graph;
      for (Mask a : all_minimum_dominating_sets(g, oracle::domination(g)))
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          int inside = 0;
          for (Vertex u : g.neighbors(v)) inside += (a >> u) & 1;
          REQUIRE(inside <= ((a >> v & 1) ? 2 : 5));
        }
    }
}

TEST_CASE("strong products P_3m x K_m have w = m") {
  for (int m = 1; m <= 3; ++m) {
    const auto ig = strong_product_path_clique(m);
    REQUIRE(validate_representation(ig.graph, ig.representation));
    const auto r = compute_w(ig.graph, ig.representation);
    CHECK(r.w == m);
    const auto approx = three_approx_cop_number(ig.graph, ig.representation);
    const int c = *cop_number_exact(ig.graph).cop_number;
    CHECK(approx.lower <= c);
    CHECK(c <= approx.upper);
    CHECK(sqrt_bound_check(ig.graph, ig.representation));
  }
}

TEST_CASE("w certificate is internally consistent") {
  const auto ig = random_interval_graph(14, 3);
  const auto r = compute_w(ig.graph, ig.representation);
  CHECK(r.certificate.wideness == r.w);
  CHECK(r.w == std::max(1, std::min(r.certificate.connectivity, r.certificate.domination)));
  CHECK(oracle::dominates(ig.graph, r.certificate.dominating_set.to_mask(), r.certificate.vertices.to_mask()));
}

TEST_CASE("representation mismatches and disconnected inputs are rejected") {
  const auto ig = strong_product_path_clique(1);
  CHECK_THROWS_AS(compute_w(complete_graph(3), ig.representation), InputError);
  IntervalRepresentation split{{{Rational(0), Rational(1)}, {Rational(2), Rational(3)}}};
  CHECK_THROWS_AS(compute_w(Graph(2, {}), split), InputError);
}
