#pragma once

#include <cstdint>
#include <vector>

#include "core/graph.hpp"
#include "core/qubo.hpp"

namespace dockclique {

enum class RelaxMethod { Linear, Quadratic };

struct RelaxedSolution {
  std::vector<double> values;  // per-vertex, in [0, 1]
  double objective = 0.0;
  RelaxMethod method = RelaxMethod::Linear;
  int iterations_used = 0;
  bool converged = false;
  std::vector<double> history;  // objective per iteration (quadratic solver)
};

/// LP relaxation of max-weight clique:
///
///   max  sum_i w_i x_i
///   s.t. x_i + x_j <= 1  for every non-edge (i, j)
///        0 <= x_i <= 1
///
/// Solved by a dense bounded-variable primal simplex with Bland's rule, one
/// constraint row per non-edge. Hitting max_iterations returns the current
/// (feasible) iterate with converged = false.
RelaxedSolution solve_linear_relaxation(const DockingGraph& graph,
                                        int max_iterations = 200);

/// Projected gradient ascent on the continuous extension
/// F(x) = sum_i w_i x_i - P * sum_pairs x_i x_j over [0, 1]^n. The seed only
/// sets the interior starting point (0.5 plus a small jitter).
RelaxedSolution solve_quadratic_relaxation(const QuboProblem& qubo,
                                           int steps = 500,
                                           double step_size = 0.05,
                                           std::uint64_t seed = 0);

/// Per-qubit RY angles for warm-started state preparation: values are clipped
/// into [eps, 1 - eps] and theta_i = 2 * asin(sqrt(c_i)), so the prepared
/// qubit has |1> probability exactly c_i.
struct WarmStartAngles {
  std::vector<double> thetas;
  double epsilon = 0.25;
};

WarmStartAngles to_warm_start_angles(const RelaxedSolution& sol, double epsilon = 0.25);

}  // namespace dockclique
