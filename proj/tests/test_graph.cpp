#include <catch_amalgamated.hpp>

#include "copsrobber/generators.hpp"
#include "copsrobber/graph.hpp"
#include "oracles.hpp"

using namespace copsrobber;

TEST_CASE("graph construction rejects malformed edge lists") {
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(-1, {}), InputError);
  const Graph g(4, {{2, 1}, {0, 3}});
  CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("vertex sets normalise and convert to masks") {
  const VertexSet s{4, 1, 4, 2};
  CHECK(s.size() == 3);
  CHECK(s[0] == 1);
  CHECK(s.contains(4));
  CHECK(VertexSet::from_mask(s.to_mask()) == s);
  CHECK(VertexSet{1, 2}.is_subset_of(s));
  CHECK_FALSE(VertexSet{0}.is_subset_of(s));
}

TEST_CASE("exact domination agrees with subset enumeration") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_connected_graphs(n)) REQUIRE(domination_number_exact(g) == oracle::domination(g));
  CHECK(domination_number_exact(petersen_graph()) == 3);
  CHECK(domination_number_exact(cycle_graph(6)) == 2);
  CHECK(is_dominating(cycle_graph(6), minimum_dominating_set(cycle_graph(6))));
}

TEST_CASE("domination refuses graphs above the exhaustive limit") {
  Limits tight;
  tight.domination = 5;
  CHECK_THROWS_AS(domination_number_exact(path_graph(6), tight), CapabilityError);
}

TEST_CASE("vertex connectivity agrees with removal enumeration") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : all_connected_graphs(n)) REQUIRE(vertex_connectivity(g) == oracle::connectivity(g));
  CHECK(vertex_connectivity(petersen_graph()) == 3);
  CHECK(is_k_connected(hypercube(3), 3));
  CHECK_FALSE(is_k_connected(hypercube(3), 4));
}

TEST_CASE("components, distances and contraction") {
  const Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(connected_components(g).size() == 3);
  CHECK_FALSE(is_connected(g));
  const auto d = bfs_distances(path_graph(5), 0);
  CHECK(d == std::vector<int>{0, 1, 2, 3, 4});
  std::vector<char> blocked(5, 0);
  blocked[2] = 1;
  CHECK(bfs_distances(path_graph(5), 0, blocked)[4] == -1);

  const Graph c = contract_edge(cycle_graph(5), {0, 1});
  CHECK(c.vertex_count() == 4);
  CHECK(c.edge_count() == 4);
  CHECK(contract_edge(complete_graph(4), {0, 1}) == complete_graph(3));
  CHECK_THROWS_AS(contract_edge(path_graph(3), {0, 2}), InputError);
}

TEST_CASE("induced subgraphs keep only internal edges") {
  const Graph h = induced_subgraph(cycle_graph(6), VertexSet{0, 1, 2, 4});
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 2);
}
