#include <catch_amalgamated.hpp>

#include "copsrobber/accessible.hpp"
#include "copsrobber/arena.hpp"
#include "copsrobber/strategies.hpp"

using namespace copsrobber;

TEST_CASE("base pair is a verified seven-vertex accessible pair") {
  const auto d = base_accessible_pair();
  CHECK(d.graph.vertex_count() == 7);
  CHECK(d.order() == 2);
  const auto rep = verify_accessible_pair(d.graph, d.x, d.v);
  CHECK(rep.neighbourhood_ok);
  CHECK(rep.chordal);
  CHECK(rep.cop_lower_bound_ok);
  CHECK(rep.access_ok);
}

TEST_CASE("accessibility fails when it should") {
  // On C4 the only allowed robber vertex is opposite v, and a cop can simply sit there.
  const auto rep = verify_accessible_pair(cycle_graph(4), VertexSet{1, 3}, 0);
  CHECK(rep.neighbourhood_ok);
  CHECK(rep.cop_lower_bound_ok);
  CHECK_FALSE(rep.access_ok);
  CHECK_FALSE(verify_accessible_pair(complete_graph(4), VertexSet{0, 1, 2}, 3).cop_lower_bound_ok);
  CHECK_FALSE(verify_accessible_pair(complete_graph(4), VertexSet{0, 1}, 3).neighbourhood_ok);
}

TEST_CASE("doubling recurrence for vertex counts") {
  int expected = 7;
  for (int m = 2; m <= 16; m *= 2) {
    const auto d = chordal_accessible(m);
    CHECK(d.graph.vertex_count() == expected);
    CHECK(d.order() == m);
    CHECK(check_accessible_structure(d));
    CHECK(is_chordal(d.graph).chordal);
    expected = 2 * (expected - 1) + 3 * (2 * m) + 1;
  }
  CHECK_THROWS_AS(chordal_accessible(3), InputError);
  CHECK_THROWS_AS(chordal_accessible(128), CapabilityError);
}

TEST_CASE("three cops lose on the order-four construction") {
  const auto d = chordal_accessible(4);
  CHECK(GameSolver::solve(d.graph, 3).winner() == Winner::Robber);
  CHECK(solve_accessibility_game(d.graph, d.x, d.v, 3, false).winner() == Winner::Robber);
}

TEST_CASE("structure check detects a missing join edge") {
  auto d = chordal_accessible(4);
  auto edges = d.graph.edges();
  const Vertex x0 = d.x[0];
  const Vertex u0 = d.composite->u[0][0];
  edges.erase(std::find(edges.begin(), edges.end(), Edge{std::min(x0, u0), std::max(x0, u0)}));
  d.graph = Graph(d.graph.vertex_count(), edges);
  CHECK_FALSE(check_accessible_structure(d));
}

TEST_CASE("accessible evader survives order-minus-one cops") {
  for (int m : {2, 4, 8}) {
    const auto d = chordal_accessible(m);
    const int k = m - 1;
    std::vector<std::unique_ptr<CopPolicy>> cops;
    cops.push_back(std::make_unique<GreedyCopPolicy>());
    cops.push_back(std::make_unique<RandomCopPolicy>(m));
    if (m <= 4) cops.push_back(std::make_unique<OptimalCopPolicy>(std::make_shared<const GameSolution>(GameSolver::solve(d.graph, k))));
    for (auto& cop : cops) {
      AccessibleEvaderPolicy evader(d);
      const auto t = play(d.graph, k, *cop, evader, 300);
      INFO("m=" << m << " cops=" << cop->name());
      CHECK_FALSE(t.outcome.captured);
      for (const auto& ply : t.plies)
        if (!ply.cops_moved) CHECK_FALSE((d.x.contains(ply.robber) || ply.robber == d.v));
    }
  }
}

TEST_CASE("accessible evader rejects too many cops") {
  const auto d = chordal_accessible(4);
  GreedyCopPolicy cops;
  AccessibleEvaderPolicy evader(d);
  CHECK_THROWS_AS(play(d.graph, 4, cops, evader, 10), ConfigurationError);
}
