#include "core/oracle.hpp"

#include <bit>
#include <cmath>

#include "core/errors.hpp"
#include "core/qubo.hpp"

namespace dockclique {

namespace {

constexpr double kTieEps = 1e-9;

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    const int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

// Lexicographic order on the sorted vertex sequences of two sets.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  while (a != 0 && b != 0) {
    const int va = std::countr_zero(a);
    const int vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;  // shorter prefix wins
}

// Sum of weights over set bits, low bit first (fixed order keeps ties exact).
double mask_weight(std::uint64_t mask, const std::vector<double>& weights) {
  double sum = 0.0;
  while (mask != 0) {
    sum += weights[std::countr_zero(mask)];
    mask &= mask - 1;
  }
  return sum;
}

struct BestTracker {
  std::uint64_t mask = 0;
  double weight = 0.0;  // empty clique
  int count = 1;

  void offer(std::uint64_t candidate, double w) {
    if (w > weight + kTieEps) {
      mask = candidate;
      weight = w;
      count = 1;
    } else if (std::abs(w - weight) <= kTieEps && candidate != mask) {
      ++count;
      if (lex_less(candidate, mask)) mask = candidate;
    }
  }
};

bool is_clique_mask(std::uint64_t z, const std::vector<std::uint64_t>& adj) {
  std::uint64_t rest = z;
  while (rest != 0) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    // every other member must be a neighbor of v
    if ((z & ~(adj[v] | (std::uint64_t(1) << v))) != 0) return false;
  }
  return true;
}

}  // namespace

OracleResult max_weight_clique_exhaustive(const DockingGraph& graph) {
  graph.validate();
  if (graph.n > 24) {
    fail(ErrorCode::Resource, "exhaustive clique scan is capped at 24 vertices; "
                              "use the branch-and-bound oracle");
  }
  const std::vector<std::uint64_t> adj = adjacency_masks(graph);
  BestTracker best;
  const std::uint64_t limit = std::uint64_t(1) << graph.n;
  for (std::uint64_t z = 1; z < limit; ++z) {
    if (!is_clique_mask(z, adj)) continue;
    best.offer(z, mask_weight(z, graph.weights));
  }
  OracleResult result;
  result.best_mask = best.mask;
  result.best_vertices = mask_to_vertices(best.mask);
  result.best_weight = best.weight;
  result.count_optimal = best.count;
  result.method = OracleMethod::Exhaustive;
  return result;
}

namespace {

struct BbState {
  const std::vector<double>* weights = nullptr;
  const std::vector<std::uint64_t>* adj = nullptr;
  std::vector<int> order;  // candidate expansion order, heavy first
  BestTracker best;

  void expand(std::uint64_t current, double current_weight,
              std::uint64_t candidates, double candidate_weight,
              std::size_t from) {
    best.offer(current, current_weight);
    for (std::size_t idx = from; idx < order.size(); ++idx) {
      const int v = order[idx];
      const std::uint64_t bit = std::uint64_t(1) << v;
      if ((candidates & bit) == 0) continue;
      // Prune: even taking every remaining candidate cannot beat the best.
      if (current_weight + candidate_weight < best.weight - kTieEps) return;
      candidates &= ~bit;
      candidate_weight -= (*weights)[v];
      const std::uint64_t next_cands = candidates & (*adj)[v];
      expand(current | bit, current_weight + (*weights)[v], next_cands,
             mask_weight(next_cands, *weights), idx + 1);
    }
  }
};

}  // namespace

OracleResult max_weight_clique_bb(const DockingGraph& graph) {
  graph.validate();
  BbState state;
  const std::vector<std::uint64_t> adj = adjacency_masks(graph);
  state.weights = &graph.weights;
  state.adj = &adj;
  state.order.resize(graph.n);
  for (int i = 0; i < graph.n; ++i) state.order[i] = i;
  std::stable_sort(state.order.begin(), state.order.end(),
                   [&](int a, int b) { return graph.weights[a] > graph.weights[b]; });

  std::uint64_t all = graph.n == 64 ? ~std::uint64_t(0)
                                    : (std::uint64_t(1) << graph.n) - 1;
  state.expand(0, 0.0, all, mask_weight(all, graph.weights), 0);

  OracleResult result;
  result.best_mask = state.best.mask;
  result.best_vertices = mask_to_vertices(state.best.mask);
  result.best_weight = state.best.weight;
  result.count_optimal = state.best.count;
  result.method = OracleMethod::BranchAndBound;
  return result;
}

std::pair<std::uint64_t, double> diag_argmax(const CostDiagonal& diag) {
  if (diag.energies.empty()) fail(ErrorCode::InvalidArgument, "empty diagonal");
  std::uint64_t best = 0;
  double best_energy = diag.energies[0];
  for (std::uint64_t z = 1; z < diag.energies.size(); ++z) {
    if (diag.energies[z] > best_energy) {
      best = z;
      best_energy = diag.energies[z];
    }
  }
  return {best, best_energy};
}

}  // namespace dockclique
