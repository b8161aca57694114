// Exercises the shared-library surface exactly as an external client would:
// only dockclique.h, no core headers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "dockclique.h"

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("dockclique_capi_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("version and qubit cap are reported") {
  CHECK(std::strlen(dc_version()) > 0);
  CHECK(dc_qubit_cap() >= 1);
}

TEST_CASE("null arguments come back as invalid-argument with a message") {
  CHECK(dc_graph_load(nullptr, nullptr) == DC_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(dc_last_error()) > 0);
  dc_graph* graph = nullptr;
  CHECK(dc_graph_synthetic(-3, 0.5, 0.5, 1.0, 0, 1, &graph) ==
        DC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("synthetic graph: accessors, save/load, oracle, relaxations") {
  TempDir tmp;
  dc_graph* graph = nullptr;
  REQUIRE(dc_graph_synthetic(10, 0.5, 0.4, 1.0, 3, 12, &graph) == DC_OK);
  REQUIRE(graph != nullptr);
  CHECK(dc_graph_vertex_count(graph) == 10);
  CHECK(dc_graph_edge_count(graph) > 0);

  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      CHECK(dc_graph_adjacent(graph, i, j) == dc_graph_adjacent(graph, j, i));

  std::vector<double> weights(10);
  REQUIRE(dc_graph_weights(graph, weights.data(), 10) == DC_OK);
  for (double w : weights) CHECK(w > 0.0);
  double two[2];
  CHECK(dc_graph_weights(graph, two, 2) == DC_ERR_INVALID_ARGUMENT);

  REQUIRE(dc_graph_save(graph, tmp.file("g.json").c_str()) == DC_OK);
  dc_graph* loaded = nullptr;
  REQUIRE(dc_graph_load(tmp.file("g.json").c_str(), &loaded) == DC_OK);
  CHECK(dc_graph_vertex_count(loaded) == 10);
  CHECK(dc_graph_edge_count(loaded) == dc_graph_edge_count(graph));

  int vertices[10];
  int len = 0, ties = 0;
  double weight = 0.0;
  REQUIRE(dc_oracle_solve(graph, DC_ORACLE_EXHAUSTIVE, vertices, 10, &len,
                          &weight, &ties) == DC_OK);
  CHECK(len == 3);  // the planted clique
  CHECK(ties == 1);
  int bb_len = 0;
  double bb_weight = 0.0;
  REQUIRE(dc_oracle_solve(graph, DC_ORACLE_BRANCH_AND_BOUND, nullptr, 0, &bb_len,
                          &bb_weight, nullptr) == DC_OK);
  CHECK(bb_len == len);
  CHECK(bb_weight == doctest::Approx(weight));

  std::vector<double> values(10);
  double objective = 0.0;
  int iterations = 0, converged = 0;
  REQUIRE(dc_relax_linear(graph, 200, values.data(), 10, &objective, &iterations,
                          &converged) == DC_OK);
  CHECK(converged == 1);
  CHECK(objective >= weight - 1e-9);  // relaxation upper-bounds the clique

  REQUIRE(dc_relax_quadratic(graph, 2.0, 300, 0.05, 1, values.data(), 10,
                             &objective, &iterations) == DC_OK);
  CHECK(iterations == 300);
  for (double v : values) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }

  REQUIRE(dc_graph_write_dot(graph, tmp.file("g.dot").c_str(), vertices, len) ==
          DC_OK);
  CHECK(slurp(tmp.file("g.dot")).find("color=red") != std::string::npos);

  dc_graph_free(loaded);
  dc_graph_free(graph);
}

TEST_CASE("instance load -> graph build via the C API") {
  dc_instance* instance = nullptr;
  REQUIRE(dc_instance_load(DOCKCLIQUE_DATA_DIR "/demo_instance.json", &instance) ==
          DC_OK);
  int pockets = 0, ligands = 0;
  REQUIRE(dc_instance_counts(instance, &pockets, &ligands) == DC_OK);
  CHECK(pockets == 5);
  CHECK(ligands == 9);

  dc_graph* graph = nullptr;
  REQUIRE(dc_graph_from_instance(instance, DC_EDGE_RULE_TAU_BUFFER, 1.0, &graph) ==
          DC_OK);
  CHECK(dc_graph_vertex_count(graph) == 15);
  dc_graph_free(graph);

  CHECK(dc_graph_from_instance(instance, DC_EDGE_RULE_TAU_BUFFER, -1.0, &graph) ==
        DC_ERR_INVALID_ARGUMENT);
  dc_instance_free(instance);
}

TEST_CASE("preset graphs materialize deterministically") {
  dc_graph* a = nullptr;
  dc_graph* b = nullptr;
  REQUIRE(dc_graph_preset("demo14", &a) == DC_OK);
  REQUIRE(dc_graph_preset("demo14", &b) == DC_OK);
  CHECK(dc_graph_vertex_count(a) == 14);
  CHECK(dc_graph_edge_count(a) == dc_graph_edge_count(b));
  dc_graph* bad = nullptr;
  CHECK(dc_graph_preset("demo99", &bad) == DC_ERR_INVALID_ARGUMENT);
  dc_graph_free(a);
  dc_graph_free(b);
}

TEST_CASE("experiments: spec validation, run, outputs") {
  TempDir tmp;
  dc_experiment* experiment = nullptr;
  CHECK(dc_experiment_create("{ no json", &experiment) == DC_ERR_PARSE);
  CHECK(dc_experiment_create(R"({"graph": {"preset": "demo14"}, "shots": 0})",
                             &experiment) == DC_ERR_INVALID_ARGUMENT);
  CHECK(dc_experiment_create(
            R"({"graph": {"preset": "demo14"}, "family": "ws"})", &experiment) ==
        DC_ERR_INVALID_ARGUMENT);

  const char* spec = R"({
    "graph": {"preset": "demo14"},
    "penalty": 1.0, "family": "dc", "layers": 1,
    "warm_start": "quadratic", "epsilon": 0.25,
    "optimizer": {"method": "nelder-mead", "max_evaluations": 400},
    "shots": 2048, "seed": 9, "label": "capi-smoke"
  })";
  REQUIRE(dc_experiment_create(spec, &experiment) == DC_OK);
  CHECK(dc_experiment_write_outputs(experiment, tmp.file("out").c_str()) ==
        DC_ERR_INVALID_ARGUMENT);  // not run yet
  REQUIRE(dc_experiment_run(experiment) == DC_OK);
  CHECK(dc_experiment_evaluations(experiment) > 0);
  CHECK(dc_experiment_evaluations(experiment) <= 400);
  CHECK(dc_experiment_best_value(experiment) > 0.0);

  const std::string summary = dc_experiment_summary_json(experiment);
  CHECK(summary.find("\"best_value\"") != std::string::npos);
  CHECK(summary.find("\"solution_bitstring\"") != std::string::npos);

  REQUIRE(dc_experiment_write_outputs(experiment, tmp.file("out").c_str()) == DC_OK);
  CHECK(fs::exists(tmp.file("out") + "/summary.json"));
  CHECK(fs::exists(tmp.file("out") + "/trace.csv"));
  CHECK(fs::exists(tmp.file("out") + "/histogram.json"));
  CHECK(fs::exists(tmp.file("out") + "/solution.dot"));
  dc_experiment_free(experiment);
}

TEST_CASE("compare: runs a small two-spec comparison") {
  TempDir tmp;
  const char* specs = R"([
    {"graph": {"preset": "demo14"}, "family": "dc", "warm_start": "quadratic",
     "optimizer": {"max_evaluations": 200}, "shots": 1024, "seed": 3,
     "label": "warm"},
    {"graph": {"preset": "demo14"}, "family": "dc",
     "optimizer": {"max_evaluations": 200}, "shots": 1024, "seed": 3,
     "label": "cold"}
  ])";
  REQUIRE(dc_compare(specs, tmp.file("cmp.csv").c_str(), 2) == DC_OK);
  const std::string csv = slurp(tmp.file("cmp.csv"));
  CHECK(csv.rfind("eval,warm,cold", 0) == 0);
  CHECK(csv.find("oracle_match,") != std::string::npos);

  // reruns with the same seeds are byte-identical
  REQUIRE(dc_compare(specs, tmp.file("cmp_again.csv").c_str(), 1) == DC_OK);
  CHECK(slurp(tmp.file("cmp_again.csv")) == csv);

  CHECK(dc_compare(R"([{"graph": {"preset": "demo14"}}])",
                   tmp.file("cmp2.csv").c_str(), 1) == DC_ERR_INVALID_ARGUMENT);

  // specs must share one graph source
  const char* mismatched = R"([
    {"graph": {"preset": "demo14"}, "optimizer": {"max_evaluations": 10}},
    {"graph": {"preset": "demo17"}, "optimizer": {"max_evaluations": 10}}
  ])";
  CHECK(dc_compare(mismatched, tmp.file("cmp3.csv").c_str(), 1) ==
        DC_ERR_INVALID_ARGUMENT);
}
