#include "dockclique.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/experiment.hpp"
#include "core/graph.hpp"
#include "core/instance.hpp"
#include "core/io.hpp"
#include "core/limits.hpp"
#include "core/oracle.hpp"
#include "core/qubo.hpp"
#include "core/relax.hpp"

using namespace dockclique;

struct dc_instance {
  PharmacophoreInstance value;
};

struct dc_graph {
  DockingGraph value;
};

struct dc_experiment {
  ExperimentSpec spec;
  bool ran = false;
  ExperimentResult result;
  std::string summary_cache;
};

namespace {

thread_local std::string g_last_error;

dc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return DC_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse:
      return DC_ERR_PARSE;
    case ErrorCode::Validation:
      return DC_ERR_VALIDATION;
    case ErrorCode::Resource:
      return DC_ERR_RESOURCE;
    case ErrorCode::Io:
      return DC_ERR_IO;
    case ErrorCode::Numeric:
      return DC_ERR_NUMERIC;
  }
  return DC_ERR_INTERNAL;
}

// Runs the body, translating exceptions into status codes + dc_last_error().
template <typename Fn>
dc_status guarded(Fn&& body) {
  try {
    body();
    return DC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DC_ERR_INTERNAL;
  }
}

dc_status require_arg(bool ok, const char* message) {
  if (ok) return DC_OK;
  g_last_error = message;
  return DC_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* dc_version(void) { return "0.1.0"; }

const char* dc_last_error(void) { return g_last_error.c_str(); }

int dc_qubit_cap(void) { return qubit_cap(); }

dc_status dc_instance_load(const char* path, dc_instance** out) {
  if (dc_status s = require_arg(path && out, "path and out must be non-null"))
    return s;
  return guarded([&] { *out = new dc_instance{load_instance(path)}; });
}

dc_status dc_instance_save(const dc_instance* instance, const char* path) {
  if (dc_status s = require_arg(instance && path, "instance and path must be non-null"))
    return s;
  return guarded([&] { save_instance(instance->value, path); });
}

void dc_instance_free(dc_instance* instance) { delete instance; }

dc_status dc_instance_counts(const dc_instance* instance, int* pocket_count,
                             int* ligand_count) {
  if (dc_status s = require_arg(instance != nullptr, "instance must be non-null"))
    return s;
  if (pocket_count) *pocket_count = static_cast<int>(instance->value.pocket.size());
  if (ligand_count) *ligand_count = static_cast<int>(instance->value.ligand.size());
  return DC_OK;
}

dc_status dc_graph_from_instance(const dc_instance* instance, dc_edge_rule rule,
                                 double value, dc_graph** out) {
  if (dc_status s = require_arg(instance && out, "instance and out must be non-null"))
    return s;
  return guarded([&] {
    const EdgeRule edge_rule = rule == DC_EDGE_RULE_DELTA_SUM
                                   ? EdgeRule::delta_sum(value)
                                   : EdgeRule::tau_buffer(value);
    *out = new dc_graph{build_graph(instance->value, edge_rule)};
  });
}

dc_status dc_graph_synthetic(int n, double edge_density, double weight_lo,
                             double weight_hi, int planted_clique,
                             uint64_t seed, dc_graph** out) {
  if (dc_status s = require_arg(out != nullptr, "out must be non-null")) return s;
  return guarded([&] {
    SyntheticSpec spec;
    spec.n = n;
    spec.edge_density = edge_density;
    spec.weight_lo = weight_lo;
    spec.weight_hi = weight_hi;
    spec.planted_clique = planted_clique;
    spec.seed = seed;
    *out = new dc_graph{generate_synthetic(spec)};
  });
}

dc_status dc_graph_preset(const char* name, dc_graph** out) {
  if (dc_status s = require_arg(name && out, "name and out must be non-null"))
    return s;
  return guarded([&] { *out = new dc_graph{generate_synthetic(preset_spec(name))}; });
}

dc_status dc_graph_load(const char* path, dc_graph** out) {
  if (dc_status s = require_arg(path && out, "path and out must be non-null"))
    return s;
  return guarded([&] { *out = new dc_graph{load_graph(path)}; });
}

dc_status dc_graph_save(const dc_graph* graph, const char* path) {
  if (dc_status s = require_arg(graph && path, "graph and path must be non-null"))
    return s;
  return guarded([&] { save_graph(graph->value, path); });
}

void dc_graph_free(dc_graph* graph) { delete graph; }

int dc_graph_vertex_count(const dc_graph* graph) {
  return graph ? graph->value.n : 0;
}

int dc_graph_edge_count(const dc_graph* graph) {
  return graph ? static_cast<int>(graph->value.edges.size()) : 0;
}

int dc_graph_adjacent(const dc_graph* graph, int i, int j) {
  if (!graph || i < 0 || j < 0 || i >= graph->value.n || j >= graph->value.n)
    return 0;
  return graph->value.adjacent(i, j) ? 1 : 0;
}

dc_status dc_graph_weights(const dc_graph* graph, double* out, int cap) {
  if (dc_status s = require_arg(graph && out, "graph and out must be non-null"))
    return s;
  if (dc_status s = require_arg(cap >= graph->value.n, "weights buffer too small"))
    return s;
  std::memcpy(out, graph->value.weights.data(),
              sizeof(double) * graph->value.weights.size());
  return DC_OK;
}

dc_status dc_graph_write_dot(const dc_graph* graph, const char* path,
                             const int* solution, int solution_len) {
  if (dc_status s = require_arg(graph && path, "graph and path must be non-null"))
    return s;
  return guarded([&] {
    std::vector<int> vertices;
    if (solution != nullptr && solution_len > 0)
      vertices.assign(solution, solution + solution_len);
    write_dot(graph->value, path, vertices);
  });
}

dc_status dc_graph_write_cost_diagonal(const dc_graph* graph,
                                       double penalty_magnitude,
                                       const char* path) {
  if (dc_status s = require_arg(graph && path, "graph and path must be non-null"))
    return s;
  return guarded([&] {
    const QuboProblem qubo = build_qubo(graph->value, penalty_magnitude);
    write_cost_diagonal(build_cost_diagonal(qubo), path);
  });
}

dc_status dc_oracle_solve(const dc_graph* graph, dc_oracle_method method,
                          int* vertices, int cap, int* out_len,
                          double* out_weight, int* out_count_optimal) {
  if (dc_status s = require_arg(graph != nullptr, "graph must be non-null"))
    return s;
  return guarded([&] {
    const OracleResult result = method == DC_ORACLE_BRANCH_AND_BOUND
                                    ? max_weight_clique_bb(graph->value)
                                    : max_weight_clique_exhaustive(graph->value);
    const int len = static_cast<int>(result.best_vertices.size());
    if (vertices != nullptr) {
      if (cap < len) fail(ErrorCode::InvalidArgument, "vertices buffer too small");
      std::memcpy(vertices, result.best_vertices.data(), sizeof(int) * len);
    }
    if (out_len) *out_len = len;
    if (out_weight) *out_weight = result.best_weight;
    if (out_count_optimal) *out_count_optimal = result.count_optimal;
  });
}

dc_status dc_relax_linear(const dc_graph* graph, int max_iterations,
                          double* values, int cap, double* objective,
                          int* iterations_used, int* converged) {
  if (dc_status s = require_arg(graph && values, "graph and values must be non-null"))
    return s;
  if (dc_status s = require_arg(cap >= graph->value.n, "values buffer too small"))
    return s;
  return guarded([&] {
    const RelaxedSolution sol = solve_linear_relaxation(graph->value, max_iterations);
    std::memcpy(values, sol.values.data(), sizeof(double) * sol.values.size());
    if (objective) *objective = sol.objective;
    if (iterations_used) *iterations_used = sol.iterations_used;
    if (converged) *converged = sol.converged ? 1 : 0;
  });
}

dc_status dc_relax_quadratic(const dc_graph* graph, double penalty_magnitude,
                             int steps, double step_size, uint64_t seed,
                             double* values, int cap, double* objective,
                             int* iterations_used) {
  if (dc_status s = require_arg(graph && values, "graph and values must be non-null"))
    return s;
  if (dc_status s = require_arg(cap >= graph->value.n, "values buffer too small"))
    return s;
  return guarded([&] {
    const QuboProblem qubo = build_qubo(graph->value, penalty_magnitude);
    const RelaxedSolution sol =
        solve_quadratic_relaxation(qubo, steps, step_size, seed);
    std::memcpy(values, sol.values.data(), sizeof(double) * sol.values.size());
    if (objective) *objective = sol.objective;
    if (iterations_used) *iterations_used = sol.iterations_used;
  });
}

dc_status dc_experiment_create(const char* spec_json, dc_experiment** out) {
  if (dc_status s = require_arg(spec_json && out, "spec_json and out must be non-null"))
    return s;
  return guarded([&] {
    auto* experiment = new dc_experiment;
    try {
      experiment->spec = ExperimentSpec::from_json(spec_json);
    } catch (...) {
      delete experiment;
      throw;
    }
    *out = experiment;
  });
}

dc_status dc_experiment_run(dc_experiment* experiment) {
  if (dc_status s = require_arg(experiment != nullptr, "experiment must be non-null"))
    return s;
  return guarded([&] {
    experiment->result = run_experiment(experiment->spec);
    experiment->summary_cache = experiment->result.summary_json();
    experiment->ran = true;
  });
}

dc_status dc_experiment_write_outputs(const dc_experiment* experiment,
                                      const char* dir) {
  if (dc_status s = require_arg(experiment && dir, "experiment and dir must be non-null"))
    return s;
  if (dc_status s = require_arg(experiment->ran, "experiment has not been run"))
    return s;
  return guarded([&] { experiment->result.write_outputs(dir); });
}

const char* dc_experiment_summary_json(const dc_experiment* experiment) {
  if (!experiment || !experiment->ran) return "";
  return experiment->summary_cache.c_str();
}

double dc_experiment_best_value(const dc_experiment* experiment) {
  if (!experiment || !experiment->ran) return 0.0;
  return experiment->result.trace.best_value;
}

int dc_experiment_evaluations(const dc_experiment* experiment) {
  if (!experiment || !experiment->ran) return 0;
  return static_cast<int>(experiment->result.trace.records.size());
}

void dc_experiment_free(dc_experiment* experiment) { delete experiment; }

dc_status dc_compare(const char* specs_json, const char* out_csv, int workers) {
  if (dc_status s = require_arg(specs_json && out_csv,
                                "specs_json and out_csv must be non-null"))
    return s;
  return guarded([&] {
    nlohmann::json array;
    try {
      array = nlohmann::json::parse(specs_json);
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorCode::Parse, std::string("compare specs: ") + e.what());
    }
    if (!array.is_array())
      fail(ErrorCode::InvalidArgument, "compare specs must be a JSON array");
    std::vector<ExperimentSpec> specs;
    specs.reserve(array.size());
    for (const auto& item : array)
      specs.push_back(ExperimentSpec::from_json(item.dump()));
    const ComparisonResult result = compare_experiments(specs, workers);
    write_text_file(out_csv, result.csv);
  });
}

}  // extern "C"
