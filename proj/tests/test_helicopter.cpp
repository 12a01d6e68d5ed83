#include <catch_amalgamated.hpp>

#include "copsrobber/decomposition.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/helicopter.hpp"
#include "oracles.hpp"

using namespace copsrobber;

TEST_CASE("helicopter cop count is treewidth plus one") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : all_connected_graphs(n)) REQUIRE(helicopter_min_cops(g) == oracle::treewidth(g) + 1);
}

TEST_CASE("helicopter values on named graphs") {
  CHECK(helicopter_min_cops(complete_graph(4)) == 4);
  CHECK(helicopter_min_cops(cycle_graph(5)) == 3);
  CHECK(helicopter_min_cops(path_graph(6)) == 2);
  CHECK(helicopter_min_cops(grid(3)) == 4);
  CHECK(helicopter_min_cops(petersen_graph()) == 5);
}

TEST_CASE("helicopter wins are monotone in the number of cops") {
  const Graph g = hypercube(3);
  CHECK_FALSE(helicopter_cops_win(g, 3));
  CHECK(helicopter_cops_win(g, 4));
  CHECK(helicopter_cops_win(g, 5));
}

TEST_CASE("helicopter game refuses large graphs") {
  CHECK_THROWS_AS(helicopter_min_cops(grid(4)), CapabilityError);
}
