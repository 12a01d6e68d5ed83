#include <catch_amalgamated.hpp>

#include "copsrobber/arena.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/strategies.hpp"
#include "copsrobber/wide.hpp"

using namespace copsrobber;

namespace {

class JumpingCops : public CopPolicy {
 public:
  std::string name() const override { return "jumper"; }
  std::vector<Vertex> place(const Graph&, int k) override { return std::vector<Vertex>(k, 0); }
  std::vector<Vertex> move(const Graph& g, const std::vector<Vertex>& cops, Vertex) override {
    return std::vector<Vertex>(cops.size(), g.vertex_count() - 1);
  }
};

class IdleCops : public CopPolicy {
 public:
  std::string name() const override { return "idle"; }
  std::vector<Vertex> place(const Graph&, int k) override { return std::vector<Vertex>(k, 2); }
  std::vector<Vertex> move(const Graph&, const std::vector<Vertex>& cops, Vertex) override { return cops; }
};

// Runs from 0 to the far end of a path through the cop on vertex 2.
class TrespassingRobber : public RobberPolicy {
 public:
  std::string name() const override { return "trespasser"; }
  Vertex place(const Graph&, const std::vector<Vertex>&) override { return 0; }
  Vertex move(const Graph& g, const std::vector<Vertex>&, Vertex) override { return g.vertex_count() - 1; }
};

std::shared_ptr<const GameSolution> solved(const Graph& g, int k) {
  return std::make_shared<const GameSolution>(GameSolver::solve(g, k));
}

std::vector<std::unique_ptr<RobberPolicy>> robbers(const Graph& g, int k) {
  std::vector<std::unique_ptr<RobberPolicy>> out;
  out.push_back(std::make_unique<OptimalRobberPolicy>(solved(g, k)));
  out.push_back(std::make_unique<GreedyRobberPolicy>());
  out.push_back(std::make_unique<RandomRobberPolicy>(3));
  return out;
}

}  // namespace

TEST_CASE("arena rejects illegal moves and names the policy") {
  const Graph g = path_graph(5);
  JumpingCops jumper;
  GreedyRobberPolicy greedy;
  try {
    play(g, 1, jumper, greedy, 5);
    FAIL("expected a policy error");
  } catch (const PolicyError& e) {
    CHECK(e.policy() == "jumper");
  }
  IdleCops idle;
  TrespassingRobber trespasser;
  CHECK_THROWS_AS(play(g, 1, idle, trespasser, 5), PolicyError);
}

TEST_CASE("transcripts use one line per ply") {
  const Graph g = complete_graph(3);
  DominationCopPolicy cops;
  auto robber = OptimalRobberPolicy(solved(g, 1));
  const auto t = play(g, 1, cops, robber, 10);
  CHECK(t.outcome.to_string() == "Capture(1)");
  CHECK(t.to_string().rfind("0; cops; cops=[0]; robber=-\n", 0) == 0);
  CHECK(t.plies.size() == 3);
}

TEST_CASE("optimal cops capture with c cops within the level bound") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : all_connected_graphs(n)) {
      const auto res = cop_number_exact(g);
      const int k = *res.cop_number;
      for (auto& robber : robbers(g, k)) {
        OptimalCopPolicy cops(res.winning);
        const auto t = play(g, k, cops, *robber, 4 * n + 4);
        REQUIRE(t.outcome.captured);
      }
    }
}

TEST_CASE("optimal robber escapes c-1 cops") {
  for (const auto& g : {cycle_graph(5), hypercube(3), petersen_graph(), grid(3), complete_bipartite(3, 3)}) {
    const int k = *cop_number_exact(g).cop_number - 1;
    auto sol = solved(g, k);
    std::vector<std::unique_ptr<CopPolicy>> cops;
    cops.push_back(std::make_unique<OptimalCopPolicy>(sol));
    cops.push_back(std::make_unique<GreedyCopPolicy>());
    cops.push_back(std::make_unique<RandomCopPolicy>(11));
    for (auto& c : cops) {
      OptimalRobberPolicy robber(sol);
      CHECK_FALSE(play(g, k, *c, robber, 500).outcome.captured);
    }
  }
}

TEST_CASE("sweep captures with width plus one cops") {
  std::vector<std::pair<Graph, TreeDecomposition>> cases;
  for (const auto& g : {grid(3), hypercube(3), path_graph(5), sun3(), wheel_graph(7), petersen_graph()})
    cases.emplace_back(g, treewidth_exact(g).decomposition);
  cases.emplace_back(theta_family(3), theta_star_decomposition(3));
  for (const auto& [g, td] : cases) {
    const int k = td.width() + 1;
    for (auto& robber : robbers(g, k)) {
      SweepCopPolicy cops(td);
      REQUIRE(play(g, k, cops, *robber, 10 * g.vertex_count()).outcome.captured);
    }
  }
}

TEST_CASE("three-team cops capture with 3w cops on interval graphs") {
  std::vector<IntervalGraph> corpus{strong_product_path_clique(1), strong_product_path_clique(2)};
  for (int n = 3; n <= 14; ++n) corpus.push_back(random_interval_graph(n, 40 + n));
  for (const auto& ig : corpus) {
    const int w = compute_w(ig.graph, ig.representation).w;
    const int k = 3 * w;
    std::vector<std::unique_ptr<RobberPolicy>> rs;
    if (GameSolver::state_estimate(ig.graph.vertex_count(), k) < 5'000'000) rs.push_back(std::make_unique<OptimalRobberPolicy>(solved(ig.graph, k)));
    rs.push_back(std::make_unique<GreedyRobberPolicy>());
    rs.push_back(std::make_unique<RandomRobberPolicy>(5));
    for (auto& robber : rs) {
      ThreeTeamCopPolicy cops(ig.representation, w);
      INFO("n=" << ig.graph.vertex_count() << " robber=" << robber->name());
      REQUIRE(play(ig.graph, k, cops, *robber, 20 * ig.graph.vertex_count()).outcome.captured);
    }
  }
}

TEST_CASE("product lift captures with n c1 / n1 cops") {
  const ProductSpec spec{{cycle_graph(4), complete_graph(2)}, ProductKind::Cartesian};
  const Graph g = cartesian_product(spec);
  const auto factor = cop_number_exact(spec.factors.front());
  const int k = *factor.cop_number * 2;
  for (auto& robber : robbers(g, k)) {
    ProductLiftCopPolicy cops(spec, std::make_unique<OptimalCopPolicy>(factor.winning), *factor.cop_number);
    CHECK(play(g, k, cops, *robber, 100).outcome.captured);
  }
  ProductLiftCopPolicy wrong(spec, std::make_unique<OptimalCopPolicy>(factor.winning), *factor.cop_number);
  GreedyRobberPolicy greedy;
  CHECK_THROWS_AS(play(g, k + 1, wrong, greedy, 10), ConfigurationError);
}

TEST_CASE("wide evader survives k-1 cops") {
  const Graph q = hypercube(3);
  const auto w = lower_bound_wide(q);
  REQUIRE(w.k == 2);
  OptimalCopPolicy cops(solved(q, 1));
  WideEvaderPolicy evader(q, w.subgraph, w.k);
  CHECK_FALSE(play(q, 1, cops, evader, 1000).outcome.captured);
  CHECK_THROWS_AS(WideEvaderPolicy(q, VertexSet{0, 1}, 2), ConfigurationError);
}

TEST_CASE("theta evader survives m-1 cops") {
  const Graph g = theta_family(3);
  OptimalCopPolicy cops(solved(g, 2));
  ThetaEvaderPolicy evader(3);
  const auto t = play(g, 2, cops, evader, 2000);
  CHECK(t.outcome.to_string() == "Survived(2000)");
  ThetaEvaderPolicy wrong(4);
  GreedyCopPolicy greedy;
  CHECK_THROWS_AS(play(g, 2, greedy, wrong, 5), InputError);
}

TEST_CASE("domination cops need a dominating set of at most k vertices") {
  const Graph g = cycle_graph(6);
  DominationCopPolicy cops;
  GreedyRobberPolicy robber;
  CHECK_THROWS_AS(play(g, 1, cops, robber, 5), ConfigurationError);
  DominationCopPolicy two;
  CHECK(play(g, 2, two, robber, 5).outcome == Outcome{true, 1});
}
