#include "core/optimize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace dockclique {

std::string opt_method_name(OptMethod method) {
  return method == OptMethod::NelderMead ? "nelder-mead" : "spsa";
}

namespace {

class TracingObjective {
 public:
  TracingObjective(const std::function<double(std::span<const double>)>& f,
                   int budget, RunTrace* trace)
      : f_(f), budget_(budget), trace_(trace) {}

  bool exhausted() const { return evals_ >= budget_; }

  // Minimization view of the traced maximization objective.
  double operator()(const std::vector<double>& x) {
    if (exhausted()) throw BudgetExhausted{};
    const auto start = std::chrono::steady_clock::now();
    const double value = f_(x);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (std::isnan(value)) {
      fail(ErrorCode::Numeric,
           "objective returned NaN at evaluation " + std::to_string(evals_));
    }
    trace_->records.push_back({evals_, x, value, elapsed});
    if (trace_->best_params.empty() || value > trace_->best_value) {
      trace_->best_value = value;
      trace_->best_params = x;
    }
    ++evals_;
    return -value;
  }

  struct BudgetExhausted {};

 private:
  const std::function<double(std::span<const double>)>& f_;
  int budget_ = 0;
  int evals_ = 0;
  RunTrace* trace_ = nullptr;
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 0.5, shrink
// 0.5) over a simplex seeded at x0 with per-axis step h. Stops when the value
// spread falls under tol; one restart with a re-inflated simplex keeps
// long-budget runs exploring. Throws BudgetExhausted out of the objective
// when the evaluation budget runs dry.
void nelder_mead(TracingObjective& f, std::vector<double> x0, double h,
                 double tol, bool* converged) {
  const int d = static_cast<int>(x0.size());
  std::vector<std::vector<double>> xs;
  std::vector<double> fs;

  auto build_simplex = [&](const std::vector<double>& center) {
    xs.assign(1, center);
    for (int i = 0; i < d; ++i) {
      std::vector<double> v = center;
      v[i] += h;
      xs.push_back(std::move(v));
    }
    fs.resize(d + 1);
    for (int i = 0; i <= d; ++i) fs[i] = f(xs[i]);
  };

  auto order = [&]() {
    std::vector<int> idx(d + 1);
    for (int i = 0; i <= d; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return fs[a] < fs[b]; });
    std::vector<std::vector<double>> xs2(d + 1);
    std::vector<double> fs2(d + 1);
    for (int i = 0; i <= d; ++i) {
      xs2[i] = xs[idx[i]];
      fs2[i] = fs[idx[i]];
    }
    xs.swap(xs2);
    fs.swap(fs2);
  };

  build_simplex(x0);
  int restarts_left = 1;
  *converged = false;
  while (true) {
    order();
    if (fs[d] - fs[0] <= tol) {
      if (restarts_left > 0) {
        --restarts_left;
        build_simplex(xs[0]);
        continue;
      }
      *converged = true;
      return;
    }

    std::vector<double> centroid(d, 0.0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) centroid[j] += xs[i][j] / d;

    auto along = [&](double coeff) {
      std::vector<double> p(d);
      for (int j = 0; j < d; ++j)
        p[j] = centroid[j] + coeff * (xs[d][j] - centroid[j]);
      return p;
    };

    const std::vector<double> xr = along(-1.0);
    const double fr = f(xr);
    if (fr < fs[0]) {
      const std::vector<double> xe = along(-2.0);
      const double fe = f(xe);
      if (fe < fr) {
        xs[d] = xe;
        fs[d] = fe;
      } else {
        xs[d] = xr;
        fs[d] = fr;
      }
    } else if (fr < fs[d - 1]) {
      xs[d] = xr;
      fs[d] = fr;
    } else {
      const bool outside = fr < fs[d];
      const std::vector<double> xc = along(outside ? -0.5 : 0.5);
      const double fc = f(xc);
      if (fc < std::min(fr, fs[d])) {
        xs[d] = xc;
        fs[d] = fc;
      } else {
        for (int i = 1; i <= d; ++i) {
          for (int j = 0; j < d; ++j)
            xs[i][j] = xs[0][j] + 0.5 * (xs[i][j] - xs[0][j]);
          fs[i] = f(xs[i]);
        }
      }
    }
  }
}

// SPSA with the standard gain schedules a_k = a/(k+1+A)^0.602 and
// c_k = c/(k+1)^0.101; two evaluations per iteration with a seeded Rademacher
// perturbation. Converges when the step norm stays under tol.
void spsa(TracingObjective& f, std::vector<double> x, std::uint64_t seed,
          double tol, bool* converged) {
  const int d = static_cast<int>(x.size());
  std::mt19937_64 rng(mix_seed(seed, 0x5B5A));
  const double a0 = 0.2;
  const double c0 = 0.1;
  const double big_a = 50.0;
  int small_steps = 0;
  *converged = false;
  std::vector<double> plus(d), minus(d), delta(d);
  for (int k = 0;; ++k) {
    const double ak = a0 / std::pow(k + 1 + big_a, 0.602);
    const double ck = c0 / std::pow(k + 1, 0.101);
    for (int i = 0; i < d; ++i) delta[i] = (rng() & 1) ? 1.0 : -1.0;
    for (int i = 0; i < d; ++i) {
      plus[i] = x[i] + ck * delta[i];
      minus[i] = x[i] - ck * delta[i];
    }
    const double fp = f(plus);
    const double fm = f(minus);
    double step_norm_sq = 0.0;
    for (int i = 0; i < d; ++i) {
      const double g = (fp - fm) / (2.0 * ck * delta[i]);
      const double step = ak * g;
      x[i] -= step;
      step_norm_sq += step * step;
    }
    if (std::sqrt(step_norm_sq) <= tol) {
      if (++small_steps >= 5) {
        *converged = true;
        return;
      }
    } else {
      small_steps = 0;
    }
  }
}

}  // namespace

RunTrace maximize(const OptimizerConfig& config, int dim,
                  const std::function<double(std::span<const double>)>& objective,
                  std::span<const double> initial) {
  if (config.max_evaluations < 1)
    fail(ErrorCode::InvalidArgument, "max_evaluations must be >= 1");
  if (static_cast<int>(initial.size()) != dim)
    fail(ErrorCode::InvalidArgument, "initial point has wrong dimension");

  RunTrace trace;
  trace.records.reserve(std::min(config.max_evaluations, 1 << 20));
  TracingObjective traced(objective, config.max_evaluations, &trace);
  std::vector<double> x0(initial.begin(), initial.end());
  try {
    if (config.method == OptMethod::NelderMead) {
      nelder_mead(traced, std::move(x0), 0.25, config.tolerance, &trace.converged);
    } else {
      spsa(traced, std::move(x0), config.seed, config.tolerance, &trace.converged);
    }
  } catch (const TracingObjective::BudgetExhausted&) {
    trace.converged = false;
  }
  return trace;
}

RunTrace run(const OptimizerConfig& config, const AnsatzConfig& ansatz,
             const CostDiagonal& diag) {
  ansatz.validate(diag.n);
  const int dim = ansatz.param_count();
  std::mt19937_64 rng(mix_seed(config.seed, 0x1217));
  std::vector<double> initial(dim);
  for (double& v : initial) v = rand_range(rng, -0.1, 0.1);
  return maximize(
      config, dim,
      [&](std::span<const double> params) { return evaluate(ansatz, diag, params); },
      initial);
}

FinalSample sample_final(const RunTrace& trace, const AnsatzConfig& ansatz,
                         const CostDiagonal& diag, const DockingGraph& graph,
                         std::uint64_t shots, std::uint64_t seed, int k) {
  if (trace.best_params.empty())
    fail(ErrorCode::InvalidArgument, "trace holds no evaluations");
  const Statevector sv = prepare_state(ansatz, diag, trace.best_params);

  FinalSample out;
  out.histogram = sample(sv, shots, seed);

  out.top.reserve(out.histogram.counts.size());
  for (const auto& [z, count] : out.histogram.counts) {
    TopEntry entry;
    entry.index = z;
    entry.bitstring = index_to_bitstring(z, diag.n);
    entry.count = count;
    entry.energy = diag.energies[z];
    const CliqueReport report = decode(z, graph);
    entry.is_clique = report.is_clique;
    entry.weight = report.weight;
    entry.vertices = report.vertices;
    out.top.push_back(std::move(entry));
  }
  std::sort(out.top.begin(), out.top.end(),
            [](const TopEntry& a, const TopEntry& b) {
              if (a.count != b.count) return a.count > b.count;
              if (a.energy != b.energy) return a.energy > b.energy;
              return a.bitstring < b.bitstring;
            });
  if (static_cast<int>(out.top.size()) > k) out.top.resize(k);

  for (const TopEntry& entry : out.top) {
    if (!entry.is_clique) continue;
    if (!out.solution.has_value() || entry.energy > out.solution->energy) {
      out.solution = entry;
    }
  }
  return out;
}

}  // namespace dockclique
