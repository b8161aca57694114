#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/instance.hpp"

namespace dockclique {

/// Edge predicate for the binding interaction graph. Two built rules exist:
///
///   TauBuffer: edge iff |d_ligand - d_pocket| <= 2*tau
///   DeltaSum:  edge iff  d_pocket + d_ligand  <= delta
///
/// Both additionally require the two vertices to use distinct ligand and
/// distinct pocket pharmacophores. TauBuffer is the default.
struct EdgeRule {
  enum class Kind { TauBuffer, DeltaSum };

  Kind kind = Kind::TauBuffer;
  double value = 1.0;  // tau or delta, angstrom; must be > 0

  static EdgeRule tau_buffer(double tau);
  static EdgeRule delta_sum(double delta);
};

/// Vertex of a built graph: which ligand/pocket pharmacophore pair it stands
/// for (indices into the instance's lists).
struct VertexLabel {
  int ligand = 0;
  int pocket = 0;

  bool operator==(const VertexLabel&) const = default;
};

/// Vertex-weighted undirected simple graph. Edges are stored canonically as
/// (i, j) with i < j, sorted and unique. Max supported size is 64 vertices so
/// that subsets fit in one word.
struct DockingGraph {
  int n = 0;
  std::vector<double> weights;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;  // empty or exactly n entries

  bool adjacent(int i, int j) const;
  double total_weight() const;
  double max_weight() const;

  /// Canonicalizes, dedupes and sorts the edge list. Call after bulk edits.
  void normalize_edges();

  /// Throws Error(Validation) on self-loops, out-of-range endpoints, bad
  /// weight count, or non-positive / non-finite weights.
  void validate() const;
};

/// Per-vertex neighbor bitmasks; masks[i] has bit j set iff (i,j) is an edge.
std::vector<std::uint64_t> adjacency_masks(const DockingGraph& graph);

/// One vertex per true compatibility entry, ordered row-major over
/// (ligand, pocket) so bitstrings are reproducible.
std::vector<VertexLabel> build_nodes(const PharmacophoreInstance& instance);

std::vector<std::pair<int, int>> build_edges(
    const std::vector<VertexLabel>& nodes,
    const PharmacophoreInstance& instance, const EdgeRule& rule);

/// build_nodes + build_edges + weight assignment. Vertex weights default to
/// 1.0; when a per-kind table is given, each vertex takes the weight of its
/// matched kind (missing kinds keep 1.0).
DockingGraph build_graph(const PharmacophoreInstance& instance,
                         const EdgeRule& rule,
                         const std::map<PharmKind, double>* kind_weights = nullptr);

struct SyntheticSpec {
  int n = 0;
  double edge_density = 0.5;       // in [0, 1]
  double weight_lo = 0.5;          // > 0
  double weight_hi = 1.0;
  int planted_clique = 0;          // 0 = none, else clique size k <= n
  std::uint64_t seed = 0;

  bool operator==(const SyntheticSpec&) const = default;
};

/// Seeded random graph. With planted_clique = k, a uniformly chosen k-subset
/// is fully connected and weighted from the top of the range; the result is
/// verified to be the unique maximum-weight clique and regenerated under a
/// salted seed until it is.
DockingGraph generate_synthetic(const SyntheticSpec& spec);

}  // namespace dockclique
