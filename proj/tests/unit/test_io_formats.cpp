#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/io.hpp"
#include "core/qubo.hpp"
#include "core/rng.hpp"

using namespace dockclique;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("dockclique_test_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("graph save/load round-trips exactly") {
  TempDir tmp;
  SyntheticSpec spec;
  spec.n = 12;
  spec.edge_density = 0.4;
  spec.weight_lo = 0.2;
  spec.weight_hi = 0.9;
  spec.seed = 5;
  const DockingGraph graph = generate_synthetic(spec);
  save_graph(graph, tmp.file("g.json"));
  const DockingGraph loaded = load_graph(tmp.file("g.json"));
  CHECK(loaded.n == graph.n);
  CHECK(loaded.weights == graph.weights);
  CHECK(loaded.edges == graph.edges);
}

TEST_CASE("instance save/load round-trips") {
  TempDir tmp;
  const PharmacophoreInstance instance = load_instance(DOCKCLIQUE_DATA_DIR
                                                       "/demo_instance.json");
  CHECK(instance.pocket.size() == 5);
  CHECK(instance.ligand.size() == 9);
  save_instance(instance, tmp.file("inst.json"));
  const PharmacophoreInstance loaded = load_instance(tmp.file("inst.json"));
  CHECK(loaded.pocket.size() == instance.pocket.size());
  CHECK(loaded.compat == instance.compat);
  for (std::size_t i = 0; i < loaded.ligand.size(); ++i) {
    CHECK(loaded.ligand[i].id == instance.ligand[i].id);
    CHECK(loaded.ligand[i].kind == instance.ligand[i].kind);
    CHECK(loaded.ligand[i].position.x == instance.ligand[i].position.x);
  }
}

TEST_CASE("graph file with a self-loop names the violation") {
  TempDir tmp;
  write_text_file(tmp.file("bad.json"),
                  R"({"n": 4, "weights": [1, 1, 1, 1], "edges": [[3, 3]]})");
  CHECK_THROWS_WITH_AS(load_graph(tmp.file("bad.json")),
                       doctest::Contains("self-loop"), Error);
}

TEST_CASE("graph file without weights is a parse error naming the field") {
  TempDir tmp;
  write_text_file(tmp.file("bad.json"), R"({"n": 2, "edges": []})");
  CHECK_THROWS_WITH_AS(load_graph(tmp.file("bad.json")),
                       doctest::Contains("weights"), Error);
}

TEST_CASE("malformed JSON reports a parse error with the path") {
  TempDir tmp;
  write_text_file(tmp.file("broken.json"), "{ not json");
  try {
    load_graph(tmp.file("broken.json"));
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
  }
}

TEST_CASE("missing file is an io error") {
  CHECK_THROWS_AS(load_graph("/nonexistent/g.json"), Error);
}

TEST_CASE("instance with inconsistent compat dimensions fails validation") {
  TempDir tmp;
  write_text_file(tmp.file("inst.json"), R"({
    "pocket": [{"id": 0, "kind": "hydrophobic", "xyz": [0, 0, 0]}],
    "ligand": [{"id": 0, "kind": "hydrophobic", "xyz": [1, 0, 0]}],
    "compat": [[true], [false]]
  })");
  CHECK_THROWS_AS(load_instance(tmp.file("inst.json")), Error);
}

TEST_CASE("DOT export labels vertices and colors the solution red") {
  DockingGraph graph;
  graph.n = 3;
  graph.weights = {1.0, 0.5, 0.25};
  graph.edges = {{0, 1}, {1, 2}};
  const std::string plain = to_dot(graph);
  CHECK(plain.find("0 [label=\"0:1.000\"]") != std::string::npos);
  CHECK(plain.find("0 -- 1;") != std::string::npos);
  CHECK(plain.find("red") == std::string::npos);

  const std::string colored = to_dot(graph, {0, 1});
  CHECK(colored.find("0 [label=\"0:1.000\", color=red") != std::string::npos);
  CHECK(colored.find("0 -- 1 [color=red") != std::string::npos);
  // edge (1,2) leaves the solution: stays uncolored
  CHECK(colored.find("1 -- 2;") != std::string::npos);
}

TEST_CASE("cost diagonal dump: binary payload plus JSON header") {
  TempDir tmp;
  DockingGraph graph;
  graph.n = 2;
  graph.weights = {1.0, 2.0};
  const CostDiagonal diag = build_cost_diagonal(build_qubo(graph, 3.0));
  write_cost_diagonal(diag, tmp.file("diag.f64"));

  std::ifstream in(tmp.file("diag.f64"), std::ios::binary);
  std::vector<double> payload(4);
  in.read(reinterpret_cast<char*>(payload.data()), 4 * sizeof(double));
  CHECK(payload == diag.energies);

  const auto header = nlohmann::json::parse(read_text_file(tmp.file("diag.f64.json")));
  CHECK(header.at("n") == 2);
  CHECK(header.at("penalty_magnitude") == 3.0);
}

TEST_CASE("relaxed solution JSON carries the required fields") {
  RelaxedSolution sol;
  sol.values = {0.5, 1.0};
  sol.objective = 1.5;
  sol.method = RelaxMethod::Quadratic;
  sol.iterations_used = 42;
  const auto j = nlohmann::json::parse(relaxed_to_json(sol));
  CHECK(j.at("values").size() == 2);
  CHECK(j.at("objective") == 1.5);
  CHECK(j.at("method") == "quadratic");
  CHECK(j.at("iterations_used") == 42);
}
