#include "core/graph.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/oracle.hpp"
#include "core/rng.hpp"

namespace dockclique {

EdgeRule EdgeRule::tau_buffer(double tau) {
  if (!(tau > 0.0)) fail(ErrorCode::InvalidArgument, "tau must be > 0");
  return EdgeRule{Kind::TauBuffer, tau};
}

EdgeRule EdgeRule::delta_sum(double delta) {
  if (!(delta > 0.0)) fail(ErrorCode::InvalidArgument, "delta must be > 0");
  return EdgeRule{Kind::DeltaSum, delta};
}

bool DockingGraph::adjacent(int i, int j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

double DockingGraph::total_weight() const {
  double sum = 0.0;
  for (double w : weights) sum += w;
  return sum;
}

double DockingGraph::max_weight() const {
  double best = 0.0;
  for (double w : weights) best = std::max(best, w);
  return best;
}

void DockingGraph::normalize_edges() {
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void DockingGraph::validate() const {
  if (n < 0 || n > 64) {
    fail(ErrorCode::Validation,
         "unsupported vertex count " + std::to_string(n) + " (max 64)");
  }
  if (static_cast<int>(weights.size()) != n) {
    fail(ErrorCode::Validation, "graph has " + std::to_string(weights.size()) +
                                    " weights for " + std::to_string(n) +
                                    " vertices");
  }
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(weights[i]) || weights[i] <= 0.0) {
      fail(ErrorCode::Validation, "weight of vertex " + std::to_string(i) +
                                      " must be finite and > 0");
    }
  }
  for (const auto& [a, b] : edges) {
    if (a == b) {
      fail(ErrorCode::Validation, "self-loop (" + std::to_string(a) + "," +
                                      std::to_string(b) + ") is not allowed");
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      fail(ErrorCode::Validation, "edge (" + std::to_string(a) + "," +
                                      std::to_string(b) + ") is out of range");
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    fail(ErrorCode::Validation, "labels must be empty or have one entry per vertex");
  }
}

std::vector<std::uint64_t> adjacency_masks(const DockingGraph& graph) {
  std::vector<std::uint64_t> masks(graph.n, 0);
  for (const auto& [a, b] : graph.edges) {
    masks[a] |= std::uint64_t(1) << b;
    masks[b] |= std::uint64_t(1) << a;
  }
  return masks;
}

std::vector<VertexLabel> build_nodes(const PharmacophoreInstance& instance) {
  instance.validate();
  std::vector<VertexLabel> nodes;
  for (int i = 0; i < static_cast<int>(instance.ligand.size()); ++i)
    for (int j = 0; j < static_cast<int>(instance.pocket.size()); ++j)
      if (instance.compat[i][j]) nodes.push_back({i, j});
  return nodes;
}

std::vector<std::pair<int, int>> build_edges(
    const std::vector<VertexLabel>& nodes,
    const PharmacophoreInstance& instance, const EdgeRule& rule) {
  if (!(rule.value > 0.0))
    fail(ErrorCode::InvalidArgument, "edge rule parameter must be > 0");

  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(nodes.size());
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const VertexLabel& vp = nodes[p];
      const VertexLabel& vq = nodes[q];
      // A ligand or pocket pharmacophore may appear at most once in a clique.
      if (vp.ligand == vq.ligand || vp.pocket == vq.pocket) continue;
      const double d_l = distance(instance.ligand[vp.ligand].position,
                                  instance.ligand[vq.ligand].position);
      const double d_p = distance(instance.pocket[vp.pocket].position,
                                  instance.pocket[vq.pocket].position);
      bool connected = false;
      if (rule.kind == EdgeRule::Kind::TauBuffer) {
        connected = std::abs(d_l - d_p) <= 2.0 * rule.value;
      } else {
        connected = d_p + d_l <= rule.value;
      }
      if (connected) edges.emplace_back(p, q);
    }
  }
  return edges;
}

DockingGraph build_graph(const PharmacophoreInstance& instance,
                         const EdgeRule& rule,
                         const std::map<PharmKind, double>* kind_weights) {
  const std::vector<VertexLabel> nodes = build_nodes(instance);
  DockingGraph graph;
  graph.n = static_cast<int>(nodes.size());
  graph.edges = build_edges(nodes, instance, rule);
  graph.weights.reserve(nodes.size());
  graph.labels.reserve(nodes.size());
  for (const VertexLabel& v : nodes) {
    double w = 1.0;
    if (kind_weights != nullptr) {
      auto it = kind_weights->find(instance.ligand[v.ligand].kind);
      if (it != kind_weights->end()) w = it->second;
    }
    graph.weights.push_back(w);
    graph.labels.push_back("L" + std::to_string(instance.ligand[v.ligand].id) +
                           ":P" + std::to_string(instance.pocket[v.pocket].id));
  }
  graph.normalize_edges();
  graph.validate();
  return graph;
}

namespace {

DockingGraph generate_once(const SyntheticSpec& spec, std::uint64_t salted_seed) {
  std::mt19937_64 rng(salted_seed);
  const int n = spec.n;
  const int k = spec.planted_clique;

  std::uint64_t planted = 0;
  if (k > 0) {
    // Uniform k-subset via partial Fisher-Yates.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(rand_below(rng, n - i));
      std::swap(perm[i], perm[j]);
    }
    for (int i = 0; i < k; ++i) planted |= std::uint64_t(1) << perm[i];
  }

  DockingGraph graph;
  graph.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool in_planted = k > 0 && (planted >> i & 1) && (planted >> j & 1);
      if (in_planted || rand_unit(rng) < spec.edge_density) {
        graph.edges.emplace_back(i, j);
      }
    }
  }
  // Planted vertices take the top of the range and the rest stay low, so the
  // plant is not just the unique optimum but also separated enough for the
  // continuous relaxations to point at it.
  const double span = spec.weight_hi - spec.weight_lo;
  graph.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    if (k > 0 && (planted >> i & 1)) {
      graph.weights[i] = rand_range(rng, spec.weight_lo + 0.85 * span, spec.weight_hi);
    } else if (k > 0) {
      graph.weights[i] = rand_range(rng, spec.weight_lo, spec.weight_lo + 0.25 * span);
    } else {
      graph.weights[i] = rand_range(rng, spec.weight_lo, spec.weight_hi);
    }
  }
  graph.normalize_edges();
  return graph;
}

bool planted_is_unique_optimum(const DockingGraph& graph, const SyntheticSpec& spec,
                               std::uint64_t salted_seed) {
  // Recover the planted set by replaying the subset draw.
  std::mt19937_64 rng(salted_seed);
  std::vector<int> perm(spec.n);
  for (int i = 0; i < spec.n; ++i) perm[i] = i;
  for (int i = 0; i < spec.planted_clique; ++i) {
    int j = i + static_cast<int>(rand_below(rng, spec.n - i));
    std::swap(perm[i], perm[j]);
  }
  std::vector<int> planted(perm.begin(), perm.begin() + spec.planted_clique);
  std::sort(planted.begin(), planted.end());

  const OracleResult best = spec.n <= 24 ? max_weight_clique_exhaustive(graph)
                                         : max_weight_clique_bb(graph);
  return best.count_optimal == 1 && best.best_vertices == planted;
}

}  // namespace

DockingGraph generate_synthetic(const SyntheticSpec& spec) {
  if (spec.n < 1)
    fail(ErrorCode::InvalidArgument, "synthetic graph needs n >= 1");
  if (spec.edge_density < 0.0 || spec.edge_density > 1.0)
    fail(ErrorCode::InvalidArgument, "edge_density must lie in [0, 1]");
  if (!(spec.weight_lo > 0.0) || !(spec.weight_hi >= spec.weight_lo))
    fail(ErrorCode::InvalidArgument, "weight range must satisfy 0 < lo <= hi");
  if (spec.planted_clique < 0 || spec.planted_clique > spec.n)
    fail(ErrorCode::InvalidArgument,
         "planted clique size " + std::to_string(spec.planted_clique) +
             " exceeds n = " + std::to_string(spec.n));

  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t salted = mix_seed(spec.seed, static_cast<std::uint64_t>(attempt));
    DockingGraph graph = generate_once(spec, salted);
    graph.validate();
    if (spec.planted_clique == 0 || planted_is_unique_optimum(graph, spec, salted)) {
      return graph;
    }
  }
  fail(ErrorCode::Numeric,
       "failed to plant a unique maximum-weight clique in " +
           std::to_string(kMaxAttempts) + " attempts; relax density or size");
}

}  // namespace dockclique
