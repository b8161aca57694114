#include "core/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/io.hpp"
#include "core/qubo.hpp"

namespace dockclique {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

AnsatzFamily parse_family(const std::string& s) {
  if (s == "conventional") return AnsatzFamily::Conventional;
  if (s == "dc") return AnsatzFamily::DCQaoa;
  if (s == "ws") return AnsatzFamily::WarmStart;
  if (s == "wsdc") return AnsatzFamily::WarmStartDC;
  fail(ErrorCode::InvalidArgument,
       "unknown family '" + s + "' (expected conventional|dc|ws|wsdc)");
}

WarmMethod parse_warm(const std::string& s) {
  if (s == "none") return WarmMethod::None;
  if (s == "linear") return WarmMethod::Linear;
  if (s == "quadratic") return WarmMethod::Quadratic;
  fail(ErrorCode::InvalidArgument,
       "unknown warm-start method '" + s + "' (expected none|linear|quadratic)");
}

OptMethod parse_opt_method(const std::string& s) {
  if (s == "nelder-mead") return OptMethod::NelderMead;
  if (s == "spsa") return OptMethod::Spsa;
  fail(ErrorCode::InvalidArgument,
       "unknown optimizer '" + s + "' (expected nelder-mead|spsa)");
}

}  // namespace

std::string warm_method_name(WarmMethod method) {
  switch (method) {
    case WarmMethod::None:
      return "none";
    case WarmMethod::Linear:
      return "linear";
    case WarmMethod::Quadratic:
      return "quadratic";
  }
  return "none";
}

AnsatzFamily ExperimentSpec::effective_family() const {
  if (warm_start == WarmMethod::None) return family;
  if (family == AnsatzFamily::Conventional) return AnsatzFamily::WarmStart;
  if (family == AnsatzFamily::DCQaoa) return AnsatzFamily::WarmStartDC;
  return family;
}

void ExperimentSpec::validate() const {
  const int sources = (graph.path.empty() ? 0 : 1) +
                      (graph.preset.empty() ? 0 : 1) +
                      (graph.synthetic.has_value() ? 1 : 0);
  if (sources != 1) {
    fail(ErrorCode::InvalidArgument,
         "exactly one graph source (path, preset or synthetic) is required");
  }
  if (!(penalty > 0.0)) fail(ErrorCode::InvalidArgument, "penalty must be > 0");
  if (layers < 1) fail(ErrorCode::InvalidArgument, "layers must be >= 1");
  if (shots < 1) fail(ErrorCode::InvalidArgument, "shots must be >= 1");
  if (warm_start == WarmMethod::None &&
      (family == AnsatzFamily::WarmStart || family == AnsatzFamily::WarmStartDC)) {
    fail(ErrorCode::InvalidArgument,
         family_name(family) + " requires a warm-start method (linear|quadratic)");
  }
  if (warm_start != WarmMethod::None && !(epsilon > 0.0 && epsilon < 0.5)) {
    fail(ErrorCode::InvalidArgument, "epsilon must lie in (0, 0.5)");
  }
  if (optimizer.max_evaluations < 1) {
    fail(ErrorCode::InvalidArgument, "max_evaluations must be >= 1");
  }
}

ExperimentSpec ExperimentSpec::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("experiment spec: ") + e.what());
  }
  ExperimentSpec spec;
  try {
    if (!j.contains("graph"))
      fail(ErrorCode::InvalidArgument, "experiment spec: missing 'graph'");
    const json& g = j.at("graph");
    if (g.contains("path")) spec.graph.path = g.at("path").get<std::string>();
    if (g.contains("preset")) spec.graph.preset = g.at("preset").get<std::string>();
    if (g.contains("synthetic")) {
      const json& s = g.at("synthetic");
      SyntheticSpec syn;
      syn.n = s.at("n").get<int>();
      syn.edge_density = s.value("edge_density", 0.5);
      syn.weight_lo = s.value("weight_lo", 0.5);
      syn.weight_hi = s.value("weight_hi", 1.0);
      syn.planted_clique = s.value("planted_clique", 0);
      syn.seed = s.value("seed", std::uint64_t(0));
      spec.graph.synthetic = syn;
    }
    spec.penalty = j.value("penalty", 1.0);
    if (j.contains("family")) spec.family = parse_family(j.at("family").get<std::string>());
    spec.layers = j.value("layers", 1);
    if (j.contains("warm_start"))
      spec.warm_start = parse_warm(j.at("warm_start").get<std::string>());
    spec.epsilon = j.value("epsilon", 0.25);
    if (j.contains("optimizer")) {
      const json& o = j.at("optimizer");
      if (o.contains("method"))
        spec.optimizer.method = parse_opt_method(o.at("method").get<std::string>());
      spec.optimizer.max_evaluations = o.value("max_evaluations", 1000);
      spec.optimizer.tolerance = o.value("tolerance", 1e-8);
    }
    spec.shots = j.value("shots", std::uint64_t(8192));
    spec.seed = j.value("seed", std::uint64_t(0));
    spec.optimizer.seed = spec.seed;
    spec.label = j.value("label", std::string());
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("experiment spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::string ExperimentSpec::to_json() const {
  ordered_json j;
  ordered_json g;
  if (!graph.path.empty()) g["path"] = graph.path;
  if (!graph.preset.empty()) g["preset"] = graph.preset;
  if (graph.synthetic.has_value()) {
    ordered_json s;
    s["n"] = graph.synthetic->n;
    s["edge_density"] = graph.synthetic->edge_density;
    s["weight_lo"] = graph.synthetic->weight_lo;
    s["weight_hi"] = graph.synthetic->weight_hi;
    s["planted_clique"] = graph.synthetic->planted_clique;
    s["seed"] = graph.synthetic->seed;
    g["synthetic"] = s;
  }
  j["graph"] = g;
  j["penalty"] = penalty;
  j["family"] = family_name(family);
  j["layers"] = layers;
  j["warm_start"] = warm_method_name(warm_start);
  j["epsilon"] = epsilon;
  j["optimizer"] = {{"method", opt_method_name(optimizer.method)},
                    {"max_evaluations", optimizer.max_evaluations},
                    {"tolerance", optimizer.tolerance}};
  j["shots"] = shots;
  j["seed"] = seed;
  if (!label.empty()) j["label"] = label;
  return j.dump(2) + "\n";
}

SyntheticSpec preset_spec(const std::string& name) {
  // Reconstructions of the 14- and 17-qubit regimes: planted-clique
  // instances with weights below 1 so penalties 1 and 2 dominate any vertex.
  if (name == "demo14") {
    SyntheticSpec spec;
    spec.n = 14;
    spec.edge_density = 0.35;
    spec.weight_lo = 0.30;
    spec.weight_hi = 0.95;
    spec.planted_clique = 4;
    spec.seed = 1406;
    return spec;
  }
  if (name == "demo17") {
    SyntheticSpec spec;
    spec.n = 17;
    spec.edge_density = 0.35;
    spec.weight_lo = 0.30;
    spec.weight_hi = 0.95;
    spec.planted_clique = 5;
    spec.seed = 1705;
    return spec;
  }
  fail(ErrorCode::InvalidArgument,
       "unknown preset '" + name + "' (expected demo14|demo17)");
}

DockingGraph resolve_graph(const GraphSource& source) {
  if (!source.path.empty()) return load_graph(source.path);
  if (!source.preset.empty()) return generate_synthetic(preset_spec(source.preset));
  if (source.synthetic.has_value()) return generate_synthetic(*source.synthetic);
  fail(ErrorCode::InvalidArgument, "empty graph source");
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();

  ExperimentResult result;
  result.spec = spec;
  result.graph = resolve_graph(spec.graph);

  const QuboProblem qubo = build_qubo(result.graph, spec.penalty);
  const CostDiagonal diag = build_cost_diagonal(qubo);

  AnsatzConfig ansatz;
  ansatz.family = spec.effective_family();
  ansatz.layers = spec.layers;
  if (spec.warm_start == WarmMethod::Linear) {
    result.relaxed = solve_linear_relaxation(result.graph);
  } else if (spec.warm_start == WarmMethod::Quadratic) {
    result.relaxed = solve_quadratic_relaxation(qubo, 500, 0.05, spec.seed);
  }
  if (result.relaxed.has_value()) {
    ansatz.warm_start = to_warm_start_angles(*result.relaxed, spec.epsilon);
  }

  result.trace = run(spec.optimizer, ansatz, diag);
  result.final_sample = sample_final(result.trace, ansatz, diag, result.graph,
                                     spec.shots, spec.seed);

  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

std::string ExperimentResult::summary_json() const {
  ordered_json j;
  j["label"] = spec.label;
  j["n"] = graph.n;
  j["family"] = family_name(spec.effective_family());
  j["layers"] = spec.layers;
  j["penalty_magnitude"] = spec.penalty;
  j["warm_start"] = warm_method_name(spec.warm_start);
  j["epsilon"] = spec.epsilon;
  j["optimizer"] = opt_method_name(spec.optimizer.method);
  j["max_evaluations"] = spec.optimizer.max_evaluations;
  j["seed"] = spec.seed;
  j["shots"] = spec.shots;
  j["evaluations_used"] = trace.records.size();
  j["converged"] = trace.converged;
  j["best_value"] = trace.best_value;
  j["best_params"] = trace.best_params;

  const TopEntry* reported = nullptr;
  if (final_sample.solution.has_value()) {
    reported = &*final_sample.solution;
  } else if (!final_sample.top.empty()) {
    reported = &final_sample.top.front();
  }
  j["solution_bitstring"] = reported ? reported->bitstring : "";
  j["solution_vertices"] = reported ? reported->vertices : std::vector<int>{};
  j["valid"] = final_sample.solution.has_value();
  j["weight"] = reported ? reported->weight : 0.0;
  j["wall_time_s"] = wall_time_s;
  return j.dump(2) + "\n";
}

std::string ExperimentResult::histogram_json() const {
  ordered_json j;
  j["shots"] = final_sample.histogram.shots;
  ordered_json counts = ordered_json::object();
  for (const auto& [z, count] : final_sample.histogram.counts) {
    counts[index_to_bitstring(z, graph.n)] = count;
  }
  j["counts"] = counts;
  ordered_json top = ordered_json::array();
  for (const TopEntry& entry : final_sample.top) {
    ordered_json t;
    t["bitstring"] = entry.bitstring;
    t["count"] = entry.count;
    t["energy"] = entry.energy;
    t["valid"] = entry.is_clique;
    t["weight"] = entry.weight;
    t["vertices"] = entry.vertices;
    top.push_back(t);
  }
  j["top"] = top;
  return j.dump(2) + "\n";
}

std::string ExperimentResult::trace_csv() const {
  std::ostringstream out;
  const int dim = trace.records.empty()
                      ? 0
                      : static_cast<int>(trace.records.front().params.size());
  out << "eval,expectation";
  for (int i = 0; i < dim; ++i) out << ",param_" << i;
  out << "\n";
  for (const EvalRecord& record : trace.records) {
    out << record.index << ',' << format_double(record.value);
    for (double p : record.params) out << ',' << format_double(p);
    out << "\n";
  }
  return out.str();
}

void ExperimentResult::write_outputs(const std::string& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCode::Io, "cannot create output directory " + dir);
  const std::filesystem::path base(dir);
  write_text_file((base / "summary.json").string(), summary_json());
  write_text_file((base / "trace.csv").string(), trace_csv());
  write_text_file((base / "histogram.json").string(), histogram_json());
  std::vector<int> solution;
  if (final_sample.solution.has_value())
    solution = final_sample.solution->vertices;
  write_dot(graph, (base / "solution.dot").string(), solution);
  if (relaxed.has_value()) {
    write_text_file((base / "relaxed.json").string(), relaxed_to_json(*relaxed));
  }
}

namespace {

std::string default_label(const ExperimentSpec& spec, std::size_t index) {
  if (!spec.label.empty()) return spec.label;
  std::ostringstream out;
  out << family_name(spec.effective_family()) << '-'
      << warm_method_name(spec.warm_start) << "-P" << spec.penalty << "-p"
      << spec.layers << "-s" << spec.seed << '-' << index;
  return out.str();
}

}  // namespace

ComparisonResult compare_experiments(const std::vector<ExperimentSpec>& specs,
                                     int workers) {
  if (specs.size() < 2)
    fail(ErrorCode::InvalidArgument, "comparison needs >= 2 experiment specs");
  if (workers < 1) fail(ErrorCode::InvalidArgument, "workers must be >= 1");
  for (const ExperimentSpec& spec : specs) {
    spec.validate();
    if (!(spec.graph == specs.front().graph)) {
      fail(ErrorCode::InvalidArgument,
           "all compared experiments must share one graph source");
    }
  }

  ComparisonResult result;
  result.runs.resize(specs.size());

  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::size_t next = 0;
  std::mutex next_mutex;
  auto worker = [&]() {
    while (true) {
      std::size_t index;
      {
        std::lock_guard<std::mutex> lock(next_mutex);
        if (next >= specs.size() || first_error) return;
        index = next++;
      }
      try {
        result.runs[index] = run_experiment(specs[index]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int pool_size = std::min<int>(workers, static_cast<int>(specs.size()));
  for (int t = 0; t < pool_size; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  const DockingGraph& graph = result.runs.front().graph;
  result.oracle = graph.n <= 24 ? max_weight_clique_exhaustive(graph)
                                : max_weight_clique_bb(graph);

  std::ostringstream csv;
  csv << "eval";
  std::size_t max_len = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    csv << ',' << default_label(specs[i], i);
    max_len = std::max(max_len, result.runs[i].trace.records.size());
  }
  csv << "\n";
  for (std::size_t row = 0; row < max_len; ++row) {
    csv << row;
    for (const ExperimentResult& run : result.runs) {
      csv << ',';
      if (row < run.trace.records.size())
        csv << format_double(run.trace.records[row].value);
    }
    csv << "\n";
  }
  csv << "oracle_match";
  for (const ExperimentResult& run : result.runs) {
    const bool match =
        run.final_sample.solution.has_value() &&
        std::abs(run.final_sample.solution->weight - result.oracle.best_weight) <=
            1e-9;
    csv << ',' << (match ? 1 : 0);
  }
  csv << "\n";
  result.csv = csv.str();
  return result;
}

}  // namespace dockclique
