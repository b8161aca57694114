#include "core/relax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace dockclique {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;

// Dense bounded-variable primal simplex, maximization. Structural variables
// live in [0,1]; one slack per constraint row with range [0, inf). The basis
// starts as the slack identity (x = 0 is feasible). Bland's rule on both the
// entering and leaving choice prevents cycling.
class BoundedSimplex {
 public:
  BoundedSimplex(int n_struct, const std::vector<std::pair<int, int>>& rows,
                 const std::vector<double>& objective)
      : n_(n_struct), m_(static_cast<int>(rows.size())), cols_(n_ + m_ + 1) {
    tab_.assign(static_cast<std::size_t>(m_) * cols_, 0.0);
    for (int r = 0; r < m_; ++r) {
      at(r, rows[r].first) = 1.0;
      at(r, rows[r].second) = 1.0;
      at(r, n_ + r) = 1.0;   // slack
      at(r, cols_ - 1) = 1.0;  // rhs
    }
    cost_.assign(n_ + m_, 0.0);
    std::copy(objective.begin(), objective.end(), cost_.begin());
    upper_.assign(n_ + m_, kInf);
    std::fill(upper_.begin(), upper_.begin() + n_, 1.0);
    state_.assign(n_ + m_, AtLower);
    basis_.resize(m_);
    for (int r = 0; r < m_; ++r) {
      basis_[r] = n_ + r;
      state_[n_ + r] = Basic;
    }
  }

  // Returns iterations used; sets converged.
  int run(int max_iterations, bool* converged) {
    int iter = 0;
    for (; iter < max_iterations; ++iter) {
      if (!step()) {
        *converged = true;
        return iter;
      }
    }
    *converged = false;
    return iter;
  }

  std::vector<double> structural_values() const {
    std::vector<double> x(n_);
    const std::vector<double> xb = basic_values();
    for (int j = 0; j < n_; ++j) {
      if (state_[j] == AtUpper) x[j] = 1.0;
    }
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) x[basis_[r]] = std::clamp(xb[r], 0.0, 1.0);
    }
    return x;
  }

 private:
  enum VarState { AtLower, AtUpper, Basic };

  double& at(int r, int c) { return tab_[static_cast<std::size_t>(r) * cols_ + c]; }
  double at(int r, int c) const { return tab_[static_cast<std::size_t>(r) * cols_ + c]; }

  // x_B = B^-1 b - sum over nonbasic-at-upper columns (lower bounds are 0).
  std::vector<double> basic_values() const {
    std::vector<double> xb(m_);
    for (int r = 0; r < m_; ++r) xb[r] = at(r, cols_ - 1);
    for (int j = 0; j < n_ + m_; ++j) {
      if (state_[j] != AtUpper) continue;
      for (int r = 0; r < m_; ++r) xb[r] -= at(r, j) * upper_[j];
    }
    return xb;
  }

  // One simplex iteration. Returns false when optimal.
  bool step() {
    std::vector<double> y(m_);
    for (int r = 0; r < m_; ++r) y[r] = cost_[basis_[r]];

    int entering = -1;
    bool from_lower = true;
    for (int j = 0; j < n_ + m_; ++j) {
      if (state_[j] == Basic) continue;
      double d = cost_[j];
      for (int r = 0; r < m_; ++r) d -= y[r] * at(r, j);
      if (state_[j] == AtLower && d > kReducedCostTol) {
        entering = j;
        from_lower = true;
        break;  // Bland: first eligible index
      }
      if (state_[j] == AtUpper && d < -kReducedCostTol) {
        entering = j;
        from_lower = false;
        break;
      }
    }
    if (entering < 0) return false;

    const std::vector<double> xb = basic_values();
    // Moving the entering variable by t >= 0 changes basic row r at rate
    // -dir * tab[r][entering], dir = +1 off the lower bound, -1 off the upper.
    const double dir = from_lower ? 1.0 : -1.0;
    double t_row = kInf;
    int leave_row = -1;
    bool leave_to_upper = false;
    for (int r = 0; r < m_; ++r) {
      const double delta = -dir * at(r, entering);  // d(x_B[r]) / dt
      double t;
      bool to_upper;
      if (delta < -kPivotTol) {
        t = std::max(xb[r], 0.0) / (-delta);  // basic hits its lower bound 0
        to_upper = false;
      } else if (delta > kPivotTol && upper_[basis_[r]] < kInf) {
        t = std::max(upper_[basis_[r]] - xb[r], 0.0) / delta;
        to_upper = true;
      } else {
        continue;
      }
      const bool better = t < t_row - kPivotTol;
      const bool tie = !better && t < t_row + kPivotTol &&
                       (leave_row < 0 || basis_[r] < basis_[leave_row]);
      if (better || tie) {  // Bland on ties: smallest leaving index
        t_row = std::min(t_row, t);
        leave_row = r;
        leave_to_upper = to_upper;
      }
    }

    if (upper_[entering] <= t_row) {
      // Bounded by the entering variable's own range: bound flip.
      state_[entering] = from_lower ? AtUpper : AtLower;
      return true;
    }
    if (leave_row < 0) {
      fail(ErrorCode::Numeric, "unbounded LP relaxation; inputs are invalid");
    }

    pivot(leave_row, entering);
    state_[basis_[leave_row]] = leave_to_upper ? AtUpper : AtLower;
    basis_[leave_row] = entering;
    state_[entering] = Basic;
    return true;
  }

  void pivot(int prow, int pcol) {
    const double p = at(prow, pcol);
    for (int c = 0; c < cols_; ++c) at(prow, c) /= p;
    for (int r = 0; r < m_; ++r) {
      if (r == prow) continue;
      const double factor = at(r, pcol);
      if (factor == 0.0) continue;
      for (int c = 0; c < cols_; ++c) at(r, c) -= factor * at(prow, c);
    }
  }

  int n_;
  int m_;
  int cols_;
  std::vector<double> tab_;
  std::vector<double> cost_;
  std::vector<double> upper_;
  std::vector<VarState> state_;
  std::vector<int> basis_;
};

}  // namespace

RelaxedSolution solve_linear_relaxation(const DockingGraph& graph,
                                        int max_iterations) {
  graph.validate();
  if (graph.n < 1) fail(ErrorCode::InvalidArgument, "empty graph");
  if (max_iterations < 1) fail(ErrorCode::InvalidArgument, "max_iterations must be >= 1");

  // One constraint row per non-edge.
  std::vector<std::pair<int, int>> rows;
  const std::vector<std::uint64_t> adj = adjacency_masks(graph);
  for (int i = 0; i < graph.n; ++i)
    for (int j = i + 1; j < graph.n; ++j)
      if ((adj[i] >> j & 1) == 0) rows.emplace_back(i, j);

  BoundedSimplex simplex(graph.n, rows, graph.weights);
  RelaxedSolution sol;
  sol.method = RelaxMethod::Linear;
  sol.iterations_used = simplex.run(max_iterations, &sol.converged);
  sol.values = simplex.structural_values();
  sol.objective = 0.0;
  for (int i = 0; i < graph.n; ++i) sol.objective += graph.weights[i] * sol.values[i];
  return sol;
}

RelaxedSolution solve_quadratic_relaxation(const QuboProblem& qubo, int steps,
                                           double step_size, std::uint64_t seed) {
  if (qubo.n < 1) fail(ErrorCode::InvalidArgument, "empty problem");
  if (steps < 1) fail(ErrorCode::InvalidArgument, "steps must be >= 1");
  if (!(step_size > 0.0)) fail(ErrorCode::InvalidArgument, "step_size must be > 0");

  std::mt19937_64 rng(mix_seed(seed, 0x71AD));
  std::vector<double> x(qubo.n);
  for (double& v : x) v = 0.5 + rand_range(rng, -0.05, 0.05);

  const std::vector<std::uint64_t> pen = qubo.penalty_masks();
  auto value_at = [&](const std::vector<double>& v) {
    double obj = 0.0;
    for (int i = 0; i < qubo.n; ++i) obj += qubo.linear[i] * v[i];
    for (const auto& [a, b] : qubo.penalty_pairs)
      obj -= qubo.penalty_magnitude * v[a] * v[b];
    return obj;
  };

  RelaxedSolution sol;
  sol.method = RelaxMethod::Quadratic;
  sol.history.reserve(static_cast<std::size_t>(steps));
  std::vector<double> grad(qubo.n);
  for (int step = 0; step < steps; ++step) {
    for (int i = 0; i < qubo.n; ++i) {
      double g = qubo.linear[i];
      for (int j = 0; j < qubo.n; ++j)
        if (pen[i] >> j & 1) g -= qubo.penalty_magnitude * x[j];
      grad[i] = g;
    }
    for (int i = 0; i < qubo.n; ++i)
      x[i] = std::clamp(x[i] + step_size * grad[i], 0.0, 1.0);
    sol.history.push_back(value_at(x));
  }
  sol.values = std::move(x);
  sol.objective = sol.history.back();
  sol.iterations_used = steps;
  sol.converged = true;
  return sol;
}

WarmStartAngles to_warm_start_angles(const RelaxedSolution& sol, double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 0.5))
    fail(ErrorCode::InvalidArgument, "epsilon must lie in (0, 0.5)");
  WarmStartAngles angles;
  angles.epsilon = epsilon;
  angles.thetas.reserve(sol.values.size());
  for (double v : sol.values) {
    const double c = std::clamp(v, epsilon, 1.0 - epsilon);
    angles.thetas.push_back(2.0 * std::asin(std::sqrt(c)));
  }
  return angles;
}

}  // namespace dockclique
