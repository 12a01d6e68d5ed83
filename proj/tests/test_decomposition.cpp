#include <catch_amalgamated.hpp>

#include "copsrobber/decomposition.hpp"
#include "copsrobber/generators.hpp"
#include "oracles.hpp"

using namespace copsrobber;

TEST_CASE("chordality matches the induced-cycle definition") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : all_connected_graphs(n)) {
      const auto r = is_chordal(g);
      REQUIRE(r.chordal == !oracle::has_chordless_cycle(g));
      if (r.chordal) CHECK(is_perfect_elimination_order(g, *r.peo));
    }
}

TEST_CASE("exact treewidth equals the best elimination order") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_connected_graphs(n)) REQUIRE(treewidth_exact(g).treewidth == oracle::treewidth(g));
  int sampled = 0;
  for (const auto& g : all_connected_graphs(7))
    if (sampled++ % 17 == 0) REQUIRE(treewidth_exact(g).treewidth == oracle::treewidth(g));
}

TEST_CASE("treewidth of named graphs") {
  CHECK(treewidth_exact(complete_graph(6)).treewidth == 5);
  CHECK(treewidth_exact(cycle_graph(7)).treewidth == 2);
  CHECK(treewidth_exact(path_graph(7)).treewidth == 1);
  CHECK(treewidth_exact(grid(3)).treewidth == 3);
  CHECK(treewidth_exact(grid(4)).treewidth == 4);
  CHECK(treewidth_exact(hypercube(3)).treewidth == 3);
  CHECK(treewidth_exact(petersen_graph()).treewidth == 4);
  CHECK(treewidth_exact(complete_bipartite(3, 4)).treewidth == 3);
}

TEST_CASE("treewidth witnesses are valid decompositions of the reported width") {
  for (const auto& g : {grid(3), hypercube(3), petersen_graph(), sun3(), wheel_graph(7)}) {
    const auto r = treewidth_exact(g);
    CHECK(validate_tree_decomposition(g, r.decomposition));
    CHECK(r.decomposition.width() == r.treewidth);
    CHECK(oracle::elimination_width(g, r.order.order) == r.treewidth);
  }
}

TEST_CASE("decomposition validation rejects broken decompositions") {
  const Graph g = cycle_graph(4);
  TreeDecomposition ok{Graph(2, {{0, 1}}), {VertexSet{0, 1, 2}, VertexSet{0, 2, 3}}};
  CHECK(validate_tree_decomposition(g, ok));

  TreeDecomposition missing_edge{Graph(2, {{0, 1}}), {VertexSet{0, 1, 2}, VertexSet{2, 3}}};
  CHECK_FALSE(validate_tree_decomposition(g, missing_edge));

  TreeDecomposition split{Graph(3, {{0, 1}, {1, 2}}), {VertexSet{0, 1, 2}, VertexSet{2, 3}, VertexSet{0, 3}}};
  CHECK_FALSE(validate_tree_decomposition(g, split));

  TreeDecomposition not_tree{Graph(2, {}), {VertexSet{0, 1, 2}, VertexSet{0, 2, 3}}};
  CHECK_FALSE(validate_tree_decomposition(g, not_tree));
}

TEST_CASE("clique trees of chordal graphs have maximal-clique bags") {
  const auto g = sun3();
  const auto r = is_chordal(g);
  REQUIRE(r.chordal);
  const auto td = clique_tree_decomposition(g, *r.peo);
  CHECK(validate_tree_decomposition(g, td));
  CHECK(td.node_count() == 4);
  CHECK(td.width() == 2);
  CHECK_FALSE(is_chordal(cycle_graph(5)).chordal);
  CHECK_THROWS_AS(clique_tree_decomposition(cycle_graph(4), EliminationOrder{{0, 1, 2, 3}}), InputError);
}

TEST_CASE("treewidth refuses graphs above the limit") {
  Limits tight;
  tight.treewidth = 8;
  CHECK_THROWS_AS(treewidth_exact(grid(3), tight), CapabilityError);
}
