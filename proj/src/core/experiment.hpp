#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/ansatz.hpp"
#include "core/graph.hpp"
#include "core/optimize.hpp"
#include "core/oracle.hpp"
#include "core/relax.hpp"

namespace dockclique {

enum class WarmMethod { None, Linear, Quadratic };

std::string warm_method_name(WarmMethod method);

/// Where the experiment's graph comes from: a file, a named preset, or inline
/// synthetic parameters.
struct GraphSource {
  std::string path;                       // exclusive with the two below
  std::string preset;                     // "demo14" or "demo17"
  std::optional<SyntheticSpec> synthetic;

  bool operator==(const GraphSource&) const = default;
};

/// One full solve: graph -> penalized encoding -> (optional) relaxation and
/// warm start -> ansatz -> classical optimization -> sampling -> decoding.
struct ExperimentSpec {
  GraphSource graph;
  double penalty = 1.0;
  AnsatzFamily family = AnsatzFamily::Conventional;  // upgraded by warm_start
  int layers = 1;
  WarmMethod warm_start = WarmMethod::None;
  double epsilon = 0.25;
  OptimizerConfig optimizer;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 0;
  std::string label;

  /// Requesting a warm start upgrades the base family: conventional -> ws,
  /// dc -> wsdc. Warm-start families without a method are rejected.
  AnsatzFamily effective_family() const;

  void validate() const;

  static ExperimentSpec from_json(const std::string& text);
  std::string to_json() const;
};

/// demo14: 14 vertices, planted 4-clique. demo17: 17 vertices, planted
/// 5-clique. Fixed seeds; weights stay below 1 so the stock penalties 1 and 2
/// both exceed the maximum vertex weight.
SyntheticSpec preset_spec(const std::string& name);
DockingGraph resolve_graph(const GraphSource& source);

struct ExperimentResult {
  ExperimentSpec spec;
  DockingGraph graph;
  std::optional<RelaxedSolution> relaxed;
  RunTrace trace;
  FinalSample final_sample;
  double wall_time_s = 0.0;

  std::string summary_json() const;    // deterministic except wall_time_s
  std::string histogram_json() const;
  std::string trace_csv() const;

  /// Writes summary.json, trace.csv, histogram.json, solution.dot (and
  /// relaxed.json when a warm start ran) under `dir`, creating it if needed.
  void write_outputs(const std::string& dir) const;
};

ExperimentResult run_experiment(const ExperimentSpec& spec);

struct ComparisonResult {
  std::vector<ExperimentResult> runs;
  OracleResult oracle;
  std::string csv;  // eval column + one cost column per run + oracle_match row
};

/// Runs all specs (sharing one graph source) with up to `workers` in
/// parallel and aligns their traces column-wise.
ComparisonResult compare_experiments(const std::vector<ExperimentSpec>& specs,
                                     int workers);

}  // namespace dockclique
