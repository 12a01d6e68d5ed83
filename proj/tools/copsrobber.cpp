// Command-line front end: gen, solve, bounds, play, verify.
//
// Exit codes: 0 success, 2 usage or input error, 3 capability or budget limit,
// 4 illegal policy move, 1 internal error or failed verification.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "copsrobber/copsrobber.hpp"

namespace fs = std::filesystem;
using namespace copsrobber;

namespace {

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kCapability = 3, kPolicy = 4 };

struct Common {
  std::uint64_t budget = Limits{}.state_budget;
  std::string format = "text";

  Limits limits() const {
    Limits l;
    l.state_budget = budget;
    return l;
  }
  bool structured() const { return format == "structured"; }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--budget", common.budget, "Solver state budget")->check(CLI::PositiveNumber);
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
}

Graph load_graph(const std::string& path) { return read_file<Graph>(path, [](std::istream& in) { return read_graph(in); }); }

IntervalRepresentation load_intervals(const std::string& path) {
  return read_file<IntervalRepresentation>(path, [](std::istream& in) { return read_intervals(in); });
}

TreeDecomposition load_decomposition(const std::string& path) {
  return read_file<TreeDecomposition>(path, [](std::istream& in) { return read_tree_decomposition(in); });
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad vertex list '" + text + "'");
    }
  }
  return out;
}

// "K2xK2xK2": factors K<n>, P<n>, C<n>, S<n> separated by 'x'.
ProductSpec parse_product(const std::string& text) {
  ProductSpec spec;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, 'x')) {
    if (item.size() < 2) throw InputError("bad product factor '" + item + "'");
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(item.substr(1), &used);
      if (used != item.size() - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad product factor '" + item + "'");
    }
    switch (item[0]) {
      case 'K': spec.factors.push_back(complete_graph(n)); break;
      case 'P': spec.factors.push_back(path_graph(n)); break;
      case 'C': spec.factors.push_back(cycle_graph(n)); break;
      case 'S': spec.factors.push_back(star_graph(n)); break;
      default: throw InputError("unknown product factor '" + item + "' (use K, P, C or S)");
    }
  }
  if (spec.factors.size() < 2) throw InputError("product needs at least two factors, e.g. K3xK3");
  return spec;
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::string family;
  std::vector<int> params;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string factors;
};

int param(const GenOptions& o, std::size_t i, const char* what) {
  if (i >= o.params.size()) throw InputError("gen " + o.family + ": missing parameter " + what);
  return o.params[i];
}

int cmd_gen(const GenOptions& o) {
  Graph g;
  std::vector<std::pair<std::string, std::string>> side;  // extension → content
  std::string summary = "family=" + o.family;
  if (!o.params.empty()) {
    std::vector<Vertex> args(o.params.begin(), o.params.end());
    summary += " args=" + join(args);
  }
  auto need_seed = [&]() {
    if (!o.seed) throw InputError("gen " + o.family + ": --seed is required");
    summary += " seed=" + std::to_string(*o.seed);
    return *o.seed;
  };
  std::size_t expected = 1;
  const auto& f = o.family;
  if (f == "theta") {
    const int m = param(o, 0, "m");
    g = theta_family(m);
    std::ostringstream td;
    write_tree_decomposition(td, theta_star_decomposition(m));
    side.emplace_back(".td", td.str());
  } else if (f == "chordal-accessible") {
    const int m = param(o, 0, "m");
    const auto d = chordal_accessible(m);
    g = d.graph;
    side.emplace_back(".access", accessible_annotation(d.x, d.v));
  } else if (f == "hypercube") {
    const int m = param(o, 0, "m");
    if (m < 0 || m > 16) throw InputError("gen hypercube: m must be in [0, 16]");
    g = hypercube(m);
  } else if (f == "grid") {
    const int r = param(o, 0, "rows");
    const int c = o.params.size() > 1 ? o.params[1] : r;
    expected = o.params.size() > 1 ? 2 : 1;
    g = grid(r, c);
  } else if (f == "complete" || f == "path" || f == "cycle" || f == "star") {
    const int n = param(o, 0, "n");
    g = f == "complete" ? complete_graph(n) : f == "path" ? path_graph(n) : f == "cycle" ? cycle_graph(n) : star_graph(n);
  } else if (f == "sun") {
    expected = 0;
    g = sun3();
  } else if (f == "petersen") {
    expected = 0;
    g = petersen_graph();
  } else if (f == "strong-product") {
    const int m = param(o, 0, "m");
    const auto ig = strong_product_path_clique(m);
    g = ig.graph;
    std::ostringstream iv;
    write_intervals(iv, ig.representation);
    side.emplace_back(".intervals", iv.str());
  } else if (f == "product") {
    expected = 0;
    if (o.factors.empty()) throw InputError("gen product: --factors is required, e.g. --factors K3xK3");
    g = cartesian_product(parse_product(o.factors));
    side.emplace_back(".product", o.factors + "\n");
    summary += " factors=" + o.factors;
  } else if (f == "random-sparse") {
    const int n = param(o, 0, "n");
    const int cap = o.params.size() > 1 ? o.params[1] : 4;
    expected = o.params.size() > 1 ? 2 : 1;
    g = largest_component(random_sparse_stripped(n, need_seed(), cap));
  } else if (f == "random-interval") {
    const int n = param(o, 0, "n");
    const auto ig = random_interval_graph(n, need_seed());
    g = ig.graph;
    std::ostringstream iv;
    write_intervals(iv, ig.representation);
    side.emplace_back(".intervals", iv.str());
  } else {
    throw InputError("unknown family '" + f + "'");
  }
  if (o.params.size() > expected) throw InputError("gen " + f + ": too many parameters");

  summary += " n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count());
  if (o.out.empty()) {
    write_graph(std::cout, g);
    std::cerr << summary << "\n";
    return kOk;
  }
  const fs::path out(o.out);
  atomic_write(out, graph_text(g));
  summary += " file=" + out.string();
  for (const auto& [ext, content] : side) {
    fs::path p = out;
    p.replace_extension(ext);
    atomic_write(p, content);
    summary += " " + ext.substr(1) + "=" + p.string();
  }
  std::cout << summary << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// solve

int cmd_solve(const std::string& file, std::optional<int> max_k, const Common& common) {
  const Graph g = load_graph(file);
  if (max_k && *max_k < 1) throw InputError("--max-k must be positive");
  const auto result = cop_number_exact(g, common.limits(), max_k, false);
  const bool resolved = result.cop_number.has_value();
  if (common.structured()) {
    KeyValueDocument doc;
    doc.add("command", "solve").add("n", g.vertex_count()).add("edges", static_cast<long long>(g.edge_count()));
    for (auto [k, w] : result.verdicts) doc.add("verdict.k" + std::to_string(k), to_string(w));
    doc.add("resolved", resolved);
    if (resolved) doc.add("cop_number", *result.cop_number);
    doc.add("lower", result.lower);
    doc.add("upper", resolved ? std::to_string(result.upper) : std::string("unknown"));
    std::cout << doc.str();
  } else {
    for (auto [k, w] : result.verdicts) std::cout << "k=" << k << ": " << to_string(w) << " win\n";
    if (resolved) std::cout << "c_inf = " << *result.cop_number << "\n";
    else std::cout << "bracket = [" << result.lower << ", ?] (state budget or --max-k reached)\n";
  }
  return resolved ? kOk : kCapability;
}

// ---------------------------------------------------------------------------
// bounds

int cmd_bounds(const std::string& file, const std::string& intervals, const std::string& product_spec,
               const std::string& decomposition, bool no_exact, const Common& common) {
  const Graph g = load_graph(file);
  BoundHints hints;
  if (!intervals.empty()) hints.intervals = load_intervals(intervals);
  if (!product_spec.empty()) hints.product = parse_product(product_spec);
  if (!decomposition.empty()) hints.decomposition = load_decomposition(decomposition);
  const auto rep = compose(g, hints, common.limits(), !no_exact);
  const std::string hi = rep.hi < 0 ? "inf" : std::to_string(rep.hi);
  if (common.structured()) {
    KeyValueDocument doc;
    doc.add("command", "bounds").add("n", g.vertex_count()).add("edges", static_cast<long long>(g.edge_count()));
    for (const auto& e : rep.entries) {
      const std::string key = "bound." + e.name;
      doc.add(key + ".kind", to_string(e.kind)).add(key + ".applicable", e.applicable);
      if (e.applicable) doc.add(key + ".value", e.value);
      doc.add(key + ".basis", e.basis).add(key + (e.applicable ? ".certificate" : ".reason"), e.certificate);
    }
    doc.add("lower", rep.lo).add("upper", hi);
    if (rep.exact) doc.add("cop_number", *rep.exact);
    std::cout << doc.str();
  } else {
    for (const auto& e : rep.entries) {
      std::cout << (e.kind == BoundKind::Lower ? "lower " : "upper ") << e.name << ": ";
      if (e.applicable) std::cout << e.value << "  [" << e.basis << "; " << e.certificate << "]\n";
      else std::cout << "not applicable (" << e.certificate << ")\n";
    }
    std::cout << "bracket = (" << rep.lo << ", " << hi << ")\n";
    if (rep.exact) std::cout << "c_inf = " << *rep.exact << " (inside bracket)\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// play

struct PlayOptions {
  std::string file;
  std::string cops = "greedy";
  std::string robber = "greedy";
  int k = 1;
  int rounds = 1000;
  std::uint64_t seed = 1;
  std::string intervals;
  std::string decomposition;
  std::string product;
  std::string dominating;
  std::string wide_set;
  int access_m = 0;
  bool quiet = false;
};

std::unique_ptr<CopPolicy> make_cop_policy(const PlayOptions& o, const Graph& g, const Limits& limits) {
  if (o.cops == "greedy") return std::make_unique<GreedyCopPolicy>();
  if (o.cops == "random") return std::make_unique<RandomCopPolicy>(o.seed);
  if (o.cops == "domination") {
    if (o.dominating.empty()) return std::make_unique<DominationCopPolicy>();
    return std::make_unique<DominationCopPolicy>(VertexSet(parse_vertex_list(o.dominating)));
  }
  if (o.cops == "optimal") return std::make_unique<OptimalCopPolicy>(std::make_shared<const GameSolution>(solve_fixed_k(g, o.k, limits)));
  if (o.cops == "sweep") {
    TreeDecomposition td = o.decomposition.empty() ? treewidth_exact(g, limits).decomposition : load_decomposition(o.decomposition);
    return std::make_unique<SweepCopPolicy>(std::move(td));
  }
  if (o.cops == "three-team") {
    if (o.intervals.empty()) throw InputError("three-team cops need --intervals");
    auto rep = load_intervals(o.intervals);
    const int w = compute_w(g, rep).w;
    return std::make_unique<ThreeTeamCopPolicy>(std::move(rep), w);
  }
  if (o.cops == "product-lift") {
    if (o.product.empty()) throw InputError("product-lift cops need --product");
    auto spec = parse_product(o.product);
    const auto factor = cop_number_exact(spec.factors.front(), limits);
    const int c1 = *factor.cop_number;
    return std::make_unique<ProductLiftCopPolicy>(std::move(spec), std::make_unique<OptimalCopPolicy>(factor.winning), c1);
  }
  throw InputError("unknown cop policy '" + o.cops + "'");
}

std::unique_ptr<RobberPolicy> make_robber_policy(const PlayOptions& o, const Graph& g, const Limits& limits) {
  if (o.robber == "greedy") return std::make_unique<GreedyRobberPolicy>();
  if (o.robber == "random") return std::make_unique<RandomRobberPolicy>(o.seed);
  if (o.robber == "optimal") return std::make_unique<OptimalRobberPolicy>(std::make_shared<const GameSolution>(solve_fixed_k(g, o.k, limits)));
  if (o.robber == "wide-evader") {
    if (o.wide_set.empty()) {
      const auto w = lower_bound_wide(g, limits);
      return std::make_unique<WideEvaderPolicy>(g, w.subgraph, w.k, limits);
    }
    const VertexSet h(parse_vertex_list(o.wide_set));
    return std::make_unique<WideEvaderPolicy>(g, h, wideness_of(g, h), limits);
  }
  if (o.robber == "theta-evader") {
    const int m = detect_theta(g);
    if (m == 0) throw InputError("theta-evader needs a theta_family graph");
    return std::make_unique<ThetaEvaderPolicy>(m);
  }
  if (o.robber == "accessible-evader") {
    int m = o.access_m;
    if (m == 0)
      for (int cand = 2; cand <= 64 && m == 0; cand *= 2)
        if (chordal_accessible(cand, limits).graph.vertex_count() == g.vertex_count()) m = cand;
    if (m == 0) throw InputError("accessible-evader: graph is not a chordal-accessible construction (try --access-m)");
    return std::make_unique<AccessibleEvaderPolicy>(chordal_accessible(m, limits), limits);
  }
  throw InputError("unknown robber policy '" + o.robber + "'");
}

int cmd_play(const PlayOptions& o, const Common& common) {
  const Graph g = load_graph(o.file);
  const auto limits = common.limits();
  auto cop = make_cop_policy(o, g, limits);
  auto robber = make_robber_policy(o, g, limits);
  const auto t = play(g, o.k, *cop, *robber, o.rounds);
  if (common.structured()) {
    KeyValueDocument doc;
    doc.add("command", "play").add("cops", cop->name()).add("robber", robber->name()).add("k", o.k);
    doc.add("rounds", o.rounds).add("seed", std::to_string(o.seed));
    doc.add("captured", t.outcome.captured).add("round", t.outcome.round).add("outcome", t.outcome.to_string());
    std::cout << doc.str();
  } else {
    if (!o.quiet) std::cout << t.to_string();
    std::cout << "outcome = " << t.outcome.to_string() << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& suite, const Common& common) {
  const auto& suites = verification_suites();
  const auto it = suites.find(suite);
  if (it == suites.end()) throw InputError("unknown suite '" + suite + "'");
  bool all = true;
  KeyValueDocument doc;
  doc.add("command", "verify").add("suite", suite);
  for (int id : it->second) {
    const auto r = run_criterion(id, common.limits());
    all = all && r.passed;
    if (common.structured()) {
      doc.add("check." + std::to_string(id) + ".name", r.name).add("check." + std::to_string(id) + ".passed", r.passed);
    } else {
      std::cout << format_check(r) << std::endl;
    }
  }
  if (common.structured()) std::cout << doc.add("passed", all).str();
  else std::cout << (all ? "suite passed" : "suite FAILED") << "\n";
  return all ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops and robber with an unbounded-speed robber"};
  app.require_subcommand(1);
  Common common;

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate a graph family");
  g->add_option("family", gen.family, "theta, chordal-accessible, hypercube, grid, complete, path, cycle, star, sun, "
                                      "petersen, strong-product, product, random-sparse, random-interval")
      ->required();
  g->add_option("params", gen.params, "Integer family parameters");
  g->add_option("--out,-o", gen.out, "Graph file; side files share its stem");
  g->add_option("--seed", gen.seed, "Seed for random families");
  g->add_option("--factors", gen.factors, "Factors for 'product', e.g. K2xK2xK2");

  std::string solve_file;
  std::optional<int> max_k;
  auto* s = app.add_subcommand("solve", "Exact cop number");
  s->add_option("graph", solve_file, "Graph file")->required();
  s->add_option("--max-k", max_k, "Largest cop count to try");
  add_common(s, common);

  std::string bounds_file, bounds_intervals, bounds_product, bounds_td;
  bool no_exact = false;
  auto* b = app.add_subcommand("bounds", "Bound report");
  b->add_option("graph", bounds_file, "Graph file")->required();
  b->add_option("--intervals", bounds_intervals, "Interval representation file");
  b->add_option("--product", bounds_product, "Cartesian product structure, e.g. K2xK2xK2");
  b->add_option("--decomposition", bounds_td, "Tree decomposition file");
  b->add_flag("--no-exact", no_exact, "Skip the exact cross-check");
  add_common(b, common);

  PlayOptions po;
  auto* p = app.add_subcommand("play", "Play one game in the arena");
  p->add_option("graph", po.file, "Graph file")->required();
  p->add_option("--cops", po.cops, "greedy, random, domination, optimal, sweep, three-team, product-lift");
  p->add_option("--robber", po.robber, "greedy, random, optimal, wide-evader, theta-evader, accessible-evader");
  p->add_option("--k", po.k, "Number of cops")->check(CLI::PositiveNumber);
  p->add_option("--rounds", po.rounds, "Round limit")->check(CLI::NonNegativeNumber);
  p->add_option("--seed", po.seed, "Seed for random policies");
  p->add_option("--intervals", po.intervals, "Interval representation (three-team)");
  p->add_option("--decomposition", po.decomposition, "Tree decomposition (sweep)");
  p->add_option("--product", po.product, "Product structure (product-lift)");
  p->add_option("--dominating", po.dominating, "Dominating set for 'domination', e.g. 0,3");
  p->add_option("--wide-set", po.wide_set, "Wide subgraph for 'wide-evader', e.g. 0,1,2,3");
  p->add_option("--access-m", po.access_m, "Order of the accessible construction");
  p->add_flag("--quiet", po.quiet, "Print only the outcome");
  add_common(p, common);

  std::string suite = "all";
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", suite, "interval, chordal, treewidth, helicopter, products, contraction, all");
  add_common(v, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*s) return cmd_solve(solve_file, max_k, common);
    if (*b) return cmd_bounds(bounds_file, bounds_intervals, bounds_product, bounds_td, no_exact, common);
    if (*p) return cmd_play(po, common);
    if (*v) return cmd_verify(suite, common);
  } catch (const PolicyError& e) {
    std::cerr << "error: policy '" << e.policy() << "': " << e.what() << "\n";
    return kPolicy;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapability;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
