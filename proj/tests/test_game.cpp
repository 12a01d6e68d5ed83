#include <catch_amalgamated.hpp>

#include "copsrobber/game.hpp"
#include "copsrobber/generators.hpp"
#include "oracles.hpp"

using namespace copsrobber;

TEST_CASE("multiset ranking is a bijection") {
  const MultisetIndexer idx(6, 3);
  CHECK(idx.size() == 56);
  for (std::uint64_t r = 0; r < idx.size(); ++r) REQUIRE(idx.rank(idx.unrank(r)) == r);
  CHECK(MultisetIndexer::count(5, 2) == 15);
}

TEST_CASE("fixed-point solver agrees with the naive game") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_connected_graphs(n))
      for (int k = 1; k <= 2; ++k) {
        const bool fast = GameSolver::solve(g, k).winner() == Winner::Cops;
        REQUIRE(fast == oracle::cops_win(g, k));
      }
}

TEST_CASE("cop numbers of small families") {
  for (int n = 1; n <= 7; ++n) CHECK(*cop_number_exact(complete_graph(n)).cop_number == 1);
  for (int n = 4; n <= 9; ++n) CHECK(*cop_number_exact(cycle_graph(n)).cop_number == 2);
  CHECK(*cop_number_exact(star_graph(7)).cop_number == 1);
  CHECK(*cop_number_exact(hypercube(3)).cop_number == 2);
  CHECK(*cop_number_exact(complete_bipartite(3, 3)).cop_number == 2);
  CHECK(*cop_number_exact(complete_bipartite(3, 3)).cop_number == oracle::cop_number(complete_bipartite(3, 3)));
  CHECK(*cop_number_exact(petersen_graph()).cop_number == oracle::cop_number(petersen_graph()));
}

TEST_CASE("more cops never lose what fewer cops win") {
  for (const auto& g : all_connected_graphs(5)) {
    bool won = false;
    for (int k = 1; k <= 4; ++k) {
      const bool w = GameSolver::solve(g, k).winner() == Winner::Cops;
      REQUIRE((!won || w));
      won = w;
    }
  }
}

TEST_CASE("recorded cop moves are legal and make progress") {
  const Graph g = grid(3);
  const auto sol = GameSolver::solve(g, 3);
  REQUIRE(sol.winner() == Winner::Cops);
  const auto& idx = sol.indexer();
  for (std::uint64_t r = 0; r < idx.size(); ++r) {
    const auto cops = idx.unrank(r);
    for (Vertex robber = 0; robber < g.vertex_count(); ++robber) {
      if (!sol.valid_robber_position(cops, robber) || !sol.cop_wins(cops, robber)) continue;
      const auto next = sol.cop_strategy(cops, robber);
      const auto options = cop_moves(g, {cops, robber, Turn::CopsToMove});
      REQUIRE(std::find(options.begin(), options.end(), next) != options.end());
      if (std::find(next.begin(), next.end(), robber) != next.end()) continue;
      for (Vertex to : robber_moves(g, {next, robber, Turn::RobberToMove})) {
        if (!sol.valid_robber_position(next, to)) continue;
        REQUIRE(sol.cop_wins(next, to));
        REQUIRE(sol.level(next, to) < sol.level(cops, robber));
      }
    }
  }
}

TEST_CASE("robber moves follow cop-free paths") {
  const Graph g = path_graph(5);
  const auto moves = robber_moves(g, {{2}, 0, Turn::RobberToMove});
  CHECK(moves == std::vector<Vertex>{0, 1});
}

TEST_CASE("budget exhaustion is reported, never guessed") {
  Limits tiny;
  tiny.state_budget = 100;
  CHECK_THROWS_AS(cop_number_exact(cycle_graph(20), tiny), CapabilityError);
  const auto partial = cop_number_exact(cycle_graph(20), tiny, std::nullopt, false);
  CHECK_FALSE(partial.cop_number.has_value());
  CHECK(partial.lower >= 1);
  CHECK_THROWS_AS(GameSolver::solve(cycle_graph(20), 3, tiny), CapabilityError);
  CHECK_THROWS_AS(cop_number_exact(Graph(3, {{0, 1}})), InputError);
}
