// dockclique command-line front end. Everything goes through the C API in
// dockclique.h; this translation unit never touches the C++ core directly.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dockclique.h"

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void die_runtime(const std::string& context) {
  std::cerr << "error: " << context << ": " << dc_last_error() << "\n";
  std::exit(kExitRuntime);
}

[[noreturn]] void die_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitUsage);
}

void check(dc_status status, const std::string& context) {
  if (status == DC_OK) return;
  if (status == DC_ERR_INVALID_ARGUMENT) die_usage(context + ": " + dc_last_error());
  die_runtime(context);
}

struct SolveOptions {
  std::string graph_path;
  std::string preset;
  std::string family = "conventional";
  int layers = 1;
  double penalty = 1.0;
  std::string warm_start = "none";
  double epsilon = 0.25;
  std::string optimizer = "nelder-mead";
  int iters = 1000;
  double tolerance = 1e-8;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 0;
  std::string label;
};

ordered_json spec_json(const SolveOptions& opt) {
  ordered_json spec;
  ordered_json graph;
  if (!opt.graph_path.empty()) graph["path"] = opt.graph_path;
  if (!opt.preset.empty()) graph["preset"] = opt.preset;
  spec["graph"] = graph;
  spec["penalty"] = opt.penalty;
  spec["family"] = opt.family;
  spec["layers"] = opt.layers;
  spec["warm_start"] = opt.warm_start;
  spec["epsilon"] = opt.epsilon;
  spec["optimizer"] = {{"method", opt.optimizer},
                       {"max_evaluations", opt.iters},
                       {"tolerance", opt.tolerance}};
  spec["shots"] = opt.shots;
  spec["seed"] = opt.seed;
  if (!opt.label.empty()) spec["label"] = opt.label;
  return spec;
}

void validate_solve_options(const SolveOptions& opt) {
  if (opt.graph_path.empty() == opt.preset.empty())
    die_usage("exactly one of --graph and --preset is required");
  if (opt.layers < 1) die_usage("--layers must be >= 1");
  if (opt.penalty <= 0.0) die_usage("--penalty must be > 0");
  if (opt.shots < 1) die_usage("--shots must be >= 1");
  if (opt.iters < 1) die_usage("--iters must be >= 1");
  if (opt.warm_start != "none" && !(opt.epsilon > 0.0 && opt.epsilon < 0.5))
    die_usage("--eps must lie in (0, 0.5)");
  if (opt.warm_start == "none" && (opt.family == "ws" || opt.family == "wsdc"))
    die_usage("family " + opt.family + " requires --warm-start linear|quadratic");
}

int cmd_build(const std::string& instance_path, const std::string& rule,
              double tau, double delta, const std::string& out_path,
              const std::string& dot_path) {
  dc_instance* instance = nullptr;
  check(dc_instance_load(instance_path.c_str(), &instance), "loading " + instance_path);
  dc_graph* graph = nullptr;
  const dc_edge_rule edge_rule =
      rule == "delta" ? DC_EDGE_RULE_DELTA_SUM : DC_EDGE_RULE_TAU_BUFFER;
  const double value = rule == "delta" ? delta : tau;
  const dc_status built = dc_graph_from_instance(instance, edge_rule, value, &graph);
  dc_instance_free(instance);
  check(built, "building graph");
  check(dc_graph_save(graph, out_path.c_str()), "writing " + out_path);
  if (!dot_path.empty())
    check(dc_graph_write_dot(graph, dot_path.c_str(), nullptr, 0), "writing " + dot_path);
  std::cout << "graph: " << out_path << " (" << dc_graph_vertex_count(graph)
            << " vertices, " << dc_graph_edge_count(graph) << " edges)\n";
  dc_graph_free(graph);
  return 0;
}

dc_graph* open_graph(const std::string& path, const std::string& preset) {
  dc_graph* graph = nullptr;
  if (!path.empty()) {
    check(dc_graph_load(path.c_str(), &graph), "loading " + path);
  } else {
    check(dc_graph_preset(preset.c_str(), &graph), "building preset " + preset);
  }
  return graph;
}

int cmd_oracle(const std::string& graph_path, const std::string& preset,
               const std::string& method, const std::string& out_path) {
  dc_graph* graph = open_graph(graph_path, preset);
  const int n = dc_graph_vertex_count(graph);
  std::vector<int> vertices(static_cast<std::size_t>(n) + 1);
  int len = 0;
  int count_optimal = 0;
  double weight = 0.0;
  const dc_oracle_method m =
      method == "bb" ? DC_ORACLE_BRANCH_AND_BOUND : DC_ORACLE_EXHAUSTIVE;
  check(dc_oracle_solve(graph, m, vertices.data(), n, &len, &weight, &count_optimal),
        "oracle");
  dc_graph_free(graph);
  vertices.resize(static_cast<std::size_t>(len));

  ordered_json j;
  j["best_vertices"] = vertices;
  j["best_weight"] = weight;
  j["count_optimal"] = count_optimal;
  j["method"] = method == "bb" ? "branch-and-bound" : "exhaustive";
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::FILE* f = std::fopen(out_path.c_str(), "wb");
    if (!f) die_usage("cannot open " + out_path);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  return 0;
}

int cmd_relax(const std::string& graph_path, const std::string& preset,
              const std::string& method, double eps, double penalty, int max_iter,
              int steps, double step_size, std::uint64_t seed,
              const std::string& out_path) {
  dc_graph* graph = open_graph(graph_path, preset);
  const int n = dc_graph_vertex_count(graph);
  std::vector<double> values(static_cast<std::size_t>(n));
  double objective = 0.0;
  int iterations = 0;
  int converged = 1;
  if (method == "linear") {
    check(dc_relax_linear(graph, max_iter, values.data(), n, &objective,
                          &iterations, &converged),
          "linear relaxation");
  } else {
    check(dc_relax_quadratic(graph, penalty, steps, step_size, seed, values.data(),
                             n, &objective, &iterations),
          "quadratic relaxation");
  }
  dc_graph_free(graph);

  ordered_json j;
  j["values"] = values;
  j["objective"] = objective;
  j["method"] = method;
  j["iterations_used"] = iterations;
  j["converged"] = converged != 0;
  j["epsilon"] = eps;
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::FILE* f = std::fopen(out_path.c_str(), "wb");
    if (!f) die_usage("cannot open " + out_path);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  }
  return 0;
}

int cmd_solve(const SolveOptions& opt, const std::string& out_dir) {
  validate_solve_options(opt);
  const std::string spec = spec_json(opt).dump();
  dc_experiment* experiment = nullptr;
  check(dc_experiment_create(spec.c_str(), &experiment), "experiment spec");
  const dc_status run_status = dc_experiment_run(experiment);
  if (run_status != DC_OK) {
    dc_experiment_free(experiment);
    die_runtime("solve");
  }
  check(dc_experiment_write_outputs(experiment, out_dir.c_str()),
        "writing outputs to " + out_dir);
  const json summary = json::parse(dc_experiment_summary_json(experiment));
  std::cout << "best expectation: " << summary.at("best_value").dump() << "\n"
            << "solution: " << summary.at("solution_bitstring").get<std::string>()
            << " (valid=" << summary.at("valid").dump()
            << ", weight=" << summary.at("weight").dump() << ")\n"
            << "evaluations: " << summary.at("evaluations_used").dump() << "\n"
            << "outputs: " << out_dir << "\n";
  dc_experiment_free(experiment);
  return 0;
}

int cmd_compare(const std::vector<std::string>& spec_paths,
                const std::string& out_csv, int workers) {
  if (spec_paths.size() < 2) die_usage("need >= 2 experiment specs to compare");
  json array = json::array();
  for (const std::string& path : spec_paths) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) die_runtime("opening " + path + " failed");
    std::string text;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof(buf), f)) > 0) text.append(buf, got);
    std::fclose(f);
    try {
      array.push_back(json::parse(text));
    } catch (const json::parse_error& e) {
      std::cerr << "error: " << path << ": " << e.what() << "\n";
      return kExitRuntime;
    }
  }
  check(dc_compare(array.dump().c_str(), out_csv.c_str(), workers), "compare");
  std::cout << "comparison: " << out_csv << "\n";
  return 0;
}

int cmd_gen(int n, double density, double wlo, double whi, int planted,
            std::uint64_t seed, const std::string& out_path,
            const std::string& dot_path) {
  dc_graph* graph = nullptr;
  check(dc_graph_synthetic(n, density, wlo, whi, planted, seed, &graph),
        "generating graph");
  check(dc_graph_save(graph, out_path.c_str()), "writing " + out_path);
  if (!dot_path.empty())
    check(dc_graph_write_dot(graph, dot_path.c_str(), nullptr, 0), "writing " + dot_path);
  std::cout << "graph: " << out_path << " (" << dc_graph_vertex_count(graph)
            << " vertices, " << dc_graph_edge_count(graph) << " edges)\n";
  dc_graph_free(graph);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dockclique: pharmacophore docking graphs solved as max-weight "
               "cliques with simulated QAOA"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "build a docking graph from a "
                                            "pharmacophore instance file");
  std::string instance_path, build_rule = "tau", build_out = "graph.json",
              build_dot;
  double tau = 0.0, delta = 0.0;
  build->add_option("--instance", instance_path, "instance JSON file")->required();
  build->add_option("--rule", build_rule, "edge rule: tau | delta")
      ->check(CLI::IsMember({"tau", "delta"}));
  build->add_option("--tau", tau, "buffer parameter for the tau rule (angstrom)");
  build->add_option("--delta", delta, "threshold for the delta rule (angstrom)");
  build->add_option("--out", build_out, "output graph JSON path");
  build->add_option("--dot", build_dot, "also write a Graphviz DOT file");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a synthetic graph");
  int gen_n = 14, gen_planted = 0;
  double gen_density = 0.5, gen_wlo = 0.5, gen_whi = 1.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "graph.json", gen_dot;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--density", gen_density, "edge probability");
  gen->add_option("--wlo", gen_wlo, "weight range low end");
  gen->add_option("--whi", gen_whi, "weight range high end");
  gen->add_option("--planted", gen_planted, "planted clique size (0 = none)");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output graph JSON path");
  gen->add_option("--dot", gen_dot, "also write a Graphviz DOT file");

  // diag
  auto* diag = app.add_subcommand("diag", "dump the penalized objective over "
                                          "all bitstrings (debugging)");
  std::string diag_graph, diag_preset, diag_out = "diagonal.f64";
  double diag_penalty = 1.0;
  diag->add_option("--graph", diag_graph, "graph JSON file");
  diag->add_option("--preset", diag_preset, "demo14 | demo17");
  diag->add_option("--penalty", diag_penalty, "penalty magnitude");
  diag->add_option("--out", diag_out, "output path (raw f64; header at *.json)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact maximum-weight clique");
  std::string oracle_graph, oracle_preset, oracle_method = "exhaustive",
              oracle_out;
  oracle->add_option("--graph", oracle_graph, "graph JSON file");
  oracle->add_option("--preset", oracle_preset, "demo14 | demo17");
  oracle->add_option("--method", oracle_method, "exhaustive | bb")
      ->check(CLI::IsMember({"exhaustive", "bb"}));
  oracle->add_option("--out", oracle_out, "write result JSON here instead of stdout");

  // relax
  auto* relax = app.add_subcommand("relax", "continuous relaxation of the clique LP/QP");
  std::string relax_graph, relax_preset, relax_method = "linear", relax_out;
  double relax_eps = 0.25, relax_penalty = 1.0, relax_step = 0.05;
  int relax_maxiter = 200, relax_steps = 500;
  std::uint64_t relax_seed = 0;
  relax->add_option("--graph", relax_graph, "graph JSON file");
  relax->add_option("--preset", relax_preset, "demo14 | demo17");
  relax->add_option("--method", relax_method, "linear | quadratic")
      ->check(CLI::IsMember({"linear", "quadratic"}));
  relax->add_option("--eps", relax_eps, "clipping parameter");
  relax->add_option("--penalty", relax_penalty, "penalty magnitude (quadratic)");
  relax->add_option("--max-iter", relax_maxiter, "simplex iteration cap (linear)");
  relax->add_option("--steps", relax_steps, "gradient steps (quadratic)");
  relax->add_option("--step-size", relax_step, "gradient step size (quadratic)");
  relax->add_option("--seed", relax_seed, "start-point seed (quadratic)");
  relax->add_option("--out", relax_out, "write result JSON here instead of stdout");

  // solve
  auto* solve = app.add_subcommand("solve", "run one QAOA experiment end to end");
  SolveOptions opt;
  std::string solve_out = "out";
  solve->add_option("--graph", opt.graph_path, "graph JSON file");
  solve->add_option("--preset", opt.preset, "demo14 | demo17");
  solve->add_option("--family", opt.family, "conventional | dc | ws | wsdc")
      ->check(CLI::IsMember({"conventional", "dc", "ws", "wsdc"}));
  solve->add_option("--layers", opt.layers, "ansatz layers p");
  solve->add_option("--penalty", opt.penalty, "penalty magnitude");
  solve->add_option("--warm-start", opt.warm_start, "none | linear | quadratic")
      ->check(CLI::IsMember({"none", "linear", "quadratic"}));
  solve->add_option("--eps", opt.epsilon, "warm-start clipping parameter");
  solve->add_option("--opt", opt.optimizer, "nelder-mead | spsa")
      ->check(CLI::IsMember({"nelder-mead", "spsa"}));
  solve->add_option("--iters", opt.iters, "objective evaluation budget");
  solve->add_option("--tol", opt.tolerance, "optimizer convergence tolerance");
  solve->add_option("--shots", opt.shots, "final sampling shots");
  solve->add_option("--seed", opt.seed, "run seed");
  solve->add_option("--label", opt.label, "label recorded in outputs");
  solve->add_option("--out", solve_out, "output directory");

  // compare
  auto* compare = app.add_subcommand("compare", "run several specs on one graph "
                                                "and align their cost traces");
  std::vector<std::string> compare_specs;
  std::string compare_out = "comparison.csv";
  int compare_workers = 4;
  compare->add_option("specs", compare_specs, "experiment spec JSON files (>= 2)");
  compare->add_option("--out", compare_out, "output CSV path");
  compare->add_option("--workers", compare_workers, "parallel runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (build->parsed()) {
    if (build_rule == "tau" && !(tau > 0.0))
      die_usage("--rule tau requires --tau > 0");
    if (build_rule == "delta" && !(delta > 0.0))
      die_usage("--rule delta requires --delta > 0");
    return cmd_build(instance_path, build_rule, tau, delta, build_out, build_dot);
  }
  if (gen->parsed())
    return cmd_gen(gen_n, gen_density, gen_wlo, gen_whi, gen_planted, gen_seed,
                   gen_out, gen_dot);
  if (diag->parsed()) {
    if (diag_graph.empty() == diag_preset.empty())
      die_usage("exactly one of --graph and --preset is required");
    if (diag_penalty <= 0.0) die_usage("--penalty must be > 0");
    dc_graph* graph = open_graph(diag_graph, diag_preset);
    check(dc_graph_write_cost_diagonal(graph, diag_penalty, diag_out.c_str()),
          "writing " + diag_out);
    std::cout << "diagonal: " << diag_out << " (header " << diag_out << ".json)\n";
    dc_graph_free(graph);
    return 0;
  }
  if (oracle->parsed()) {
    if (oracle_graph.empty() == oracle_preset.empty())
      die_usage("exactly one of --graph and --preset is required");
    return cmd_oracle(oracle_graph, oracle_preset, oracle_method, oracle_out);
  }
  if (relax->parsed()) {
    if (relax_graph.empty() == relax_preset.empty())
      die_usage("exactly one of --graph and --preset is required");
    if (!(relax_eps > 0.0 && relax_eps < 0.5))
      die_usage("--eps must lie in (0, 0.5)");
    return cmd_relax(relax_graph, relax_preset, relax_method, relax_eps,
                     relax_penalty, relax_maxiter, relax_steps, relax_step,
                     relax_seed, relax_out);
  }
  if (solve->parsed()) return cmd_solve(opt, solve_out);
  if (compare->parsed())
    return cmd_compare(compare_specs, compare_out, compare_workers);
  return kExitUsage;
}
