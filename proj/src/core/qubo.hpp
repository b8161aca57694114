#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace dockclique {

/// Penalized unconstrained binary objective for max-weight clique:
///
///   F(z) = sum_i w_i z_i - P * |{(i,j) in penalty_pairs : z_i = z_j = 1}|
///
/// penalty_pairs is exactly the set of non-edges (i < j); P is stored as a
/// positive magnitude and always subtracted.
struct QuboProblem {
  int n = 0;
  std::vector<double> linear;                     // w_i
  std::vector<std::pair<int, int>> penalty_pairs; // non-edges, i < j, sorted
  double penalty_magnitude = 1.0;

  double objective(std::uint64_t z) const;

  /// Bit j of mask i set iff (i,j) is a penalty pair.
  std::vector<std::uint64_t> penalty_masks() const;
};

QuboProblem build_qubo(const DockingGraph& graph, double penalty_magnitude);

/// Full 2^n energy table of the diagonal cost Hamiltonian; index z is read
/// little-endian (bit i = vertex i).
struct CostDiagonal {
  int n = 0;
  double penalty_magnitude = 0.0;
  std::vector<double> energies;
};

/// Materializes F(z) for every z. Entries are computed independently with a
/// fixed per-entry summation order, so chunked parallel construction is
/// bit-identical to the sequential one. Respects qubit_cap(). workers = 0
/// picks automatically (parallel only for large n).
CostDiagonal build_cost_diagonal(const QuboProblem& qubo, int workers = 0);

struct CliqueReport {
  std::vector<int> vertices;
  bool is_clique = false;
  double weight = 0.0;
};

/// Reads the selected vertex set out of z and checks pairwise adjacency.
/// Weight is reported whether or not the set is a clique.
CliqueReport decode(std::uint64_t z, const DockingGraph& graph);

/// Bitstring overload; the string is the display form (vertex 0 leftmost) and
/// must have exactly n characters, all '0' or '1'.
CliqueReport decode(const std::string& bits, const DockingGraph& graph);

/// Display form: character at position i is vertex i, so printed strings read
/// left to right as vertex 0..n-1.
std::string index_to_bitstring(std::uint64_t z, int n);
std::uint64_t bitstring_to_index(const std::string& bits);

}  // namespace dockclique
