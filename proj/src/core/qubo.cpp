#include "core/qubo.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "core/errors.hpp"
#include "core/limits.hpp"

namespace dockclique {

double QuboProblem::objective(std::uint64_t z) const {
  double value = 0.0;
  for (int i = 0; i < n; ++i)
    if (z >> i & 1) value += linear[i];
  std::uint64_t violated = 0;
  for (const auto& [a, b] : penalty_pairs)
    if ((z >> a & 1) && (z >> b & 1)) ++violated;
  return value - penalty_magnitude * static_cast<double>(violated);
}

std::vector<std::uint64_t> QuboProblem::penalty_masks() const {
  std::vector<std::uint64_t> masks(n, 0);
  for (const auto& [a, b] : penalty_pairs) {
    masks[a] |= std::uint64_t(1) << b;
    masks[b] |= std::uint64_t(1) << a;
  }
  return masks;
}

QuboProblem build_qubo(const DockingGraph& graph, double penalty_magnitude) {
  graph.validate();
  if (graph.n == 0) fail(ErrorCode::InvalidArgument, "empty graph");
  if (!(penalty_magnitude > 0.0))
    fail(ErrorCode::InvalidArgument, "penalty magnitude must be > 0");

  QuboProblem qubo;
  qubo.n = graph.n;
  qubo.linear = graph.weights;
  qubo.penalty_magnitude = penalty_magnitude;
  const std::vector<std::uint64_t> adj = adjacency_masks(graph);
  for (int i = 0; i < graph.n; ++i)
    for (int j = i + 1; j < graph.n; ++j)
      if ((adj[i] >> j & 1) == 0) qubo.penalty_pairs.emplace_back(i, j);
  return qubo;
}

namespace {

// E(z) in a fixed order: weights accumulate over set bits low to high, and the
// violated-pair count is an exact integer, so the result is independent of
// which chunk computes the entry.
inline double entry_energy(std::uint64_t z, const std::vector<double>& linear,
                           const std::vector<std::uint64_t>& pen_masks,
                           double penalty) {
  double weight = 0.0;
  std::uint64_t violated = 0;
  std::uint64_t rest = z;
  while (rest != 0) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    weight += linear[i];
    violated += std::popcount(z & pen_masks[i] & ((std::uint64_t(1) << i) - 1));
  }
  return weight - penalty * static_cast<double>(violated);
}

}  // namespace

CostDiagonal build_cost_diagonal(const QuboProblem& qubo, int workers) {
  if (qubo.n < 1) fail(ErrorCode::InvalidArgument, "empty problem");
  if (qubo.n > qubit_cap()) {
    fail(ErrorCode::Resource, "cost diagonal for " + std::to_string(qubo.n) +
                                  " qubits exceeds the cap of " +
                                  std::to_string(qubit_cap()));
  }
  CostDiagonal diag;
  diag.n = qubo.n;
  diag.penalty_magnitude = qubo.penalty_magnitude;
  const std::uint64_t size = std::uint64_t(1) << qubo.n;
  diag.energies.resize(size);
  const std::vector<std::uint64_t> pen_masks = qubo.penalty_masks();

  auto fill = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t z = begin; z < end; ++z)
      diag.energies[z] = entry_energy(z, qubo.linear, pen_masks,
                                      qubo.penalty_magnitude);
  };

  if (workers == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = (qubo.n >= 20 && hw > 1) ? static_cast<int>(std::min(hw, 8u)) : 1;
  }
  if (workers > 1) {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (size + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
      const std::uint64_t begin = static_cast<std::uint64_t>(t) * chunk;
      const std::uint64_t end = std::min(size, begin + chunk);
      if (begin < end) pool.emplace_back(fill, begin, end);
    }
    for (std::thread& t : pool) t.join();
  } else {
    fill(0, size);
  }
  return diag;
}

CliqueReport decode(std::uint64_t z, const DockingGraph& graph) {
  if (graph.n < 64 && (z >> graph.n) != 0) {
    fail(ErrorCode::InvalidArgument,
         "bitstring has set bits beyond vertex " + std::to_string(graph.n - 1));
  }
  const std::vector<std::uint64_t> adj = adjacency_masks(graph);
  CliqueReport report;
  report.is_clique = true;
  for (int i = 0; i < graph.n; ++i) {
    if ((z >> i & 1) == 0) continue;
    report.vertices.push_back(i);
    report.weight += graph.weights[i];
    if ((z & ~(adj[i] | (std::uint64_t(1) << i))) != 0) report.is_clique = false;
  }
  return report;
}

CliqueReport decode(const std::string& bits, const DockingGraph& graph) {
  if (static_cast<int>(bits.size()) != graph.n) {
    fail(ErrorCode::InvalidArgument,
         "bitstring length " + std::to_string(bits.size()) +
             " does not match vertex count " + std::to_string(graph.n));
  }
  return decode(bitstring_to_index(bits), graph);
}

std::string index_to_bitstring(std::uint64_t z, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if (z >> i & 1) out[static_cast<std::size_t>(i)] = '1';
  return out;
}

std::uint64_t bitstring_to_index(const std::string& bits) {
  if (bits.size() > 64) fail(ErrorCode::InvalidArgument, "bitstring longer than 64");
  std::uint64_t z = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      z |= std::uint64_t(1) << i;
    } else if (bits[i] != '0') {
      fail(ErrorCode::InvalidArgument, "bitstring may contain only '0' and '1'");
    }
  }
  return z;
}

}  // namespace dockclique
