#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/ansatz.hpp"
#include "core/graph.hpp"
#include "core/statevector.hpp"

namespace dockclique {

enum class OptMethod { NelderMead, Spsa };

std::string opt_method_name(OptMethod method);

struct OptimizerConfig {
  OptMethod method = OptMethod::NelderMead;
  int max_evaluations = 1000;
  std::uint64_t seed = 0;
  double tolerance = 1e-8;
};

struct EvalRecord {
  int index = 0;
  std::vector<double> params;
  double value = 0.0;    // expectation, maximization scale
  double elapsed_s = 0.0;
};

struct RunTrace {
  std::vector<EvalRecord> records;
  std::vector<double> best_params;
  double best_value = 0.0;
  bool converged = false;
};

/// Derivative-free maximization of an arbitrary objective, tracing every
/// evaluation. Deterministic per (config.seed, initial).
RunTrace maximize(const OptimizerConfig& config, int dim,
                  const std::function<double(std::span<const double>)>& objective,
                  std::span<const double> initial);

/// Maximizes evaluate(ansatz, diag, .) starting from small seeded random
/// parameters in [-0.1, 0.1].
RunTrace run(const OptimizerConfig& config, const AnsatzConfig& ansatz,
             const CostDiagonal& diag);

struct TopEntry {
  std::uint64_t index = 0;
  std::string bitstring;
  std::uint64_t count = 0;
  double energy = 0.0;  // F(z) from the diagonal
  bool is_clique = false;
  double weight = 0.0;
  std::vector<int> vertices;
};

struct FinalSample {
  SampleHistogram histogram;
  std::vector<TopEntry> top;  // k most frequent, count desc / energy desc / lex
  std::optional<TopEntry> solution;  // highest-energy valid clique among top
};

/// Re-prepares the state at trace.best_params, samples, and decodes the top-k
/// bitstrings against the graph.
FinalSample sample_final(const RunTrace& trace, const AnsatzConfig& ansatz,
                         const CostDiagonal& diag, const DockingGraph& graph,
                         std::uint64_t shots, std::uint64_t seed, int k = 10);

}  // namespace dockclique
