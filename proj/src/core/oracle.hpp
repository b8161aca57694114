#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace dockclique {

struct CostDiagonal;

enum class OracleMethod { Exhaustive, BranchAndBound };

struct OracleResult {
  std::vector<int> best_vertices;  // sorted ascending
  double best_weight = 0.0;
  int count_optimal = 0;  // distinct optimal cliques (weight ties within 1e-9)
  OracleMethod method = OracleMethod::Exhaustive;
  std::uint64_t best_mask = 0;
};

/// Scans all 2^n subsets with bitmask adjacency checks. n <= 24. Ties are
/// broken toward the lexicographically smallest vertex set.
OracleResult max_weight_clique_exhaustive(const DockingGraph& graph);

/// Branch-and-bound with a weight-sum upper bound; same result and
/// tie-breaking as the exhaustive scan, practical to roughly n = 60.
OracleResult max_weight_clique_bb(const DockingGraph& graph);

/// Exact argmax over a cost diagonal; ties resolve to the smallest index.
std::pair<std::uint64_t, double> diag_argmax(const CostDiagonal& diag);

}  // namespace dockclique
