#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "core/qubo.hpp"
#include "core/relax.hpp"

namespace dockclique {

/// Dense n-qubit state. Amplitude index z is little-endian: bit i of z is
/// qubit/vertex i, matching the encoding module. A state is exclusively owned
/// while gates mutate it; distinct states evolve safely in parallel.
struct Statevector {
  int n = 0;
  std::vector<std::complex<double>> amps;

  double norm_sq() const;
};

/// |+>^n, every amplitude 2^(-n/2).
Statevector init_uniform(int n);

/// Product state RY(theta_i)|0> per qubit; P(bit i = 1) = sin^2(theta_i / 2).
Statevector init_warm_start(const WarmStartAngles& angles);

// Rotation conventions: RX(a) = exp(-i a X / 2), RY(a) = exp(-i a Y / 2),
// RZ(a) = exp(-i a Z / 2).
void apply_rx(Statevector& sv, int qubit, double angle);
void apply_ry(Statevector& sv, int qubit, double angle);
void apply_rz(Statevector& sv, int qubit, double angle);

/// amp_z *= exp(-i * alpha * E(z)). Leaves every |amp_z| unchanged.
void apply_cost_phase(Statevector& sv, const CostDiagonal& diag, double alpha);

/// Warm-start mixer: per qubit i applies RY(theta_i) RZ(-2 beta) RY(-theta_i),
/// a rotation about the axis of the warm-start product state. Identity at
/// beta = 0, and the warm-start state itself is a fixed point up to phase.
void apply_warm_start_mixer(Statevector& sv, const WarmStartAngles& angles,
                            double beta);

/// <psi| H_C |psi> = sum_z |amp_z|^2 E(z), compensated summation.
double expectation(const Statevector& sv, const CostDiagonal& diag);

struct SampleHistogram {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t shots = 0;
};

/// shots i.i.d. samples from |amp|^2 via inverse CDF; deterministic per seed.
SampleHistogram sample(const Statevector& sv, std::uint64_t shots,
                       std::uint64_t seed);

}  // namespace dockclique
