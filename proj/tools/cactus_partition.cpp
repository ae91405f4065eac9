// Command-line front end: `solve` runs one partition problem on a graph
// file, `gen` writes a random cactus.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "cactus/cactus.hpp"
#include "cactus/graph_io.hpp"

namespace {

using namespace cactus;

enum Exit : int { kOk = 0, kInfeasible = 1, kUsage = 2, kInput = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolveArgs {
  std::string graph;
  std::string variant = "solve";
  std::optional<Weight> l, u, lw, uw, uc;
  std::optional<std::int32_t> p;
  std::string objective = "min";
  std::optional<std::string> algorithm;
  std::optional<std::string> root;
  bool oracle = false;
  bool dump_tree = false;
};

struct GenArgs {
  std::size_t n = 10;
  double density = 0.3;
  std::pair<Weight, Weight> weights{0, 10};
  std::optional<std::pair<Weight, Weight>> costs, capacities, sizes;
  std::size_t max_cycle = 6;
  std::uint64_t seed = 1;
};

template <class T>
T need(const std::optional<T>& v, const char* flag, const std::string& variant) {
  if (!v) throw UsageError("--variant " + variant + " requires " + flag);
  return *v;
}

bool uses_interval(const SolveArgs& a, bool available) {
  if (!a.algorithm) return available;
  if (*a.algorithm == "interval") {
    if (!available) throw UsageError("--variant " + a.variant + " has no interval algorithm");
    return true;
  }
  return false;
}

Json oracle_report(const OracleAnswer& ans, const PartitionResult& got, bool compare_objective) {
  Json o;
  o["oracle_feasible"] = ans.feasible;
  if (ans.objective && compare_objective) o["oracle_objective"] = *ans.objective;
  bool agrees = ans.feasible == got.feasible();
  if (agrees && ans.feasible && compare_objective) agrees = *ans.objective == got.objective;
  o["oracle_agrees"] = agrees;
  return o;
}

int run_solve(const SolveArgs& a) {
  CactusGraph g;
  try {
    g = validate_cactus(load_graph(a.graph));
  } catch (const GraphError& e) {
    std::cerr << "input error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kInput;
  }
  std::optional<Vertex> root;
  if (a.root) {
    root = g.find_vertex(*a.root);
    if (!root) throw UsageError("--root names unknown vertex '" + *a.root + "'");
  }

  const std::string& v = a.variant;
  PartitionResult result;
  std::optional<OracleAnswer> truth;
  bool compare_objective = true;
  auto catalog = [&]() { return enumerate_all(g); };

  if (v == "decide" || v == "solve") {
    const ProblemParams params{need(a.l, "-l", v), need(a.u, "-u", v), need(a.p, "-p", v)};
    const Algorithm algo = uses_interval(a, true) ? Algorithm::kInterval : Algorithm::kTupleSet;
    if (v == "decide") {
      detail::Stopwatch clock;
      params.validate();
      const bool yes = algo == Algorithm::kInterval ? decide_p_partition_poly(g, params, root)
                                                    : decide_p_partition(g, params, root);
      result.status = yes ? Status::kFeasible : (trivially_infeasible(g, params) ? Status::kTriviallyInfeasible
                                                                                 : Status::kInfeasible);
      result.stats.vertices = g.num_vertices();
      result.stats.cycles = g.num_cycles();
      result.stats.wall_ms = clock.elapsed_ms();
    } else {
      result = find_p_partition(g, params, algo, root);
    }
    compare_objective = false;
    if (a.oracle) truth = oracle_decide(catalog(), params);
  } else if (v == "min" || v == "max") {
    const Weight l = need(a.l, "-l", v), u = need(a.u, "-u", v);
    const Algorithm algo = uses_interval(a, true) ? Algorithm::kInterval : Algorithm::kTupleSet;
    result = v == "min" ? min_partition(g, l, u, algo, root) : max_partition(g, l, u, algo, root);
    if (a.oracle) truth = v == "min" ? oracle_min(catalog(), l, u) : oracle_max(catalog(), l, u);
  } else if (v == "min-cost") {
    const Weight l = need(a.l, "-l", v), u = need(a.u, "-u", v);
    uses_interval(a, false);
    result = min_cost_partition(g, l, u, a.p, root);
    if (a.oracle) truth = oracle_min_cost(catalog(), l, u, a.p);
  } else if (v == "minmax" || v == "maxmin") {
    const ProblemParams sizes{need(a.l, "-l", v), need(a.u, "-u", v), need(a.p, "-p", v)};
    uses_interval(a, false);
    result = v == "minmax" ? minmax_partition(g, sizes, root) : maxmin_partition(g, sizes, root);
    if (a.oracle) truth = v == "minmax" ? oracle_minmax(catalog(), sizes) : oracle_maxmin(catalog(), sizes);
  } else if (v == "capacity") {
    const Weight lw = a.lw.value_or(0), uw = need(a.uw, "--uw", v), uc = need(a.uc, "--uc", v);
    uses_interval(a, false);
    const auto obj = a.objective == "max" ? CountObjective::kMax : CountObjective::kMin;
    result = capacity_partition(g, lw, uw, uc, obj, root);
    if (a.oracle) truth = oracle_capacity(catalog(), lw, uw, uc, obj);
  } else {
    throw UsageError("unknown variant '" + v + "'");
  }

  Json out = result_to_json(g, result);
  if (v == "decide") {
    out.erase("objective");
  }
  if (truth) out.update(oracle_report(*truth, result, compare_objective));
  if (a.dump_tree) out["tree"] = tree_to_json(g, build_tree(g, root.value_or(default_root(g))));
  std::cout << out.dump(2) << "\n";
  return result.feasible() ? kOk : kInfeasible;
}

int run_gen(const GenArgs& a) {
  RandomCactusOptions opt;
  opt.vertices = a.n;
  opt.cycle_density = a.density;
  opt.weight = {a.weights.first, a.weights.second};
  opt.max_cycle_length = a.max_cycle;
  opt.seed = a.seed;
  auto range = [](const std::optional<std::pair<Weight, Weight>>& r) -> std::optional<AttributeRange> {
    if (!r) return std::nullopt;
    return AttributeRange{r->first, r->second};
  };
  opt.cost = range(a.costs);
  opt.capacity = range(a.capacities);
  opt.size = range(a.sizes);
  std::cout << to_json(random_cactus(opt)).dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected (l,u)-partitions of vertex-weighted cactus graphs"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve one partition problem on a graph file");
  s->add_option("graph", solve.graph, "Graph JSON file")->required();
  s->add_option("--variant", solve.variant, "Problem to solve")
      ->check(CLI::IsMember({"decide", "solve", "min", "max", "min-cost", "minmax", "maxmin", "capacity"}));
  s->add_option("-l", solve.l, "Lower cluster bound (weight, or size for minmax/maxmin)");
  s->add_option("-u", solve.u, "Upper cluster bound (weight, or size for minmax/maxmin)");
  s->add_option("-p", solve.p, "Number of clusters");
  s->add_option("--lw", solve.lw, "Lower cluster weight (capacity variant)");
  s->add_option("--uw", solve.uw, "Upper cluster weight (capacity variant)");
  s->add_option("--uc", solve.uc, "Upper cluster capacity (capacity variant)");
  s->add_option("--objective", solve.objective, "Capacity variant: fewest or most clusters")
      ->check(CLI::IsMember({"min", "max"}));
  s->add_option("--algorithm", solve.algorithm, "DP algorithm")->check(CLI::IsMember({"tupleset", "interval"}));
  s->add_option("--root", solve.root, "Root vertex id of the DFS tree");
  s->add_flag("--oracle", solve.oracle, "Cross-check against brute-force enumeration");
  s->add_flag("--dump-tree", solve.dump_tree, "Include the rooted tree and cycle records");

  GenArgs gen;
  auto* gsub = app.add_subcommand("gen", "Write a random cactus graph");
  gsub->add_option("-n", gen.n, "Number of vertices")->check(CLI::PositiveNumber);
  gsub->add_option("--density", gen.density, "Probability of growing a cycle")->check(CLI::Range(0.0, 1.0));
  gsub->add_option("--weight-range", gen.weights, "Vertex weights LO HI");
  gsub->add_option("--cost-range", gen.costs, "Edge costs LO HI");
  gsub->add_option("--capacity-range", gen.capacities, "Edge capacities LO HI");
  gsub->add_option("--size-range", gen.sizes, "Vertex sizes LO HI");
  gsub->add_option("--max-cycle", gen.max_cycle, "Longest generated cycle");
  gsub->add_option("--seed", gen.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*s) return run_solve(solve);
    return run_gen(gen);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidParams& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kUsage;
  } catch (const OracleTooLarge& e) {
    std::cerr << "oracle: " << e.what() << "\n";
    return kUsage;
  } catch (const GraphError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  }
}
