#include "core/statevector.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/limits.hpp"
#include "core/rng.hpp"

namespace dockclique {

namespace {

using cd = std::complex<double>;

void check_qubit(const Statevector& sv, int qubit) {
  if (qubit < 0 || qubit >= sv.n) {
    fail(ErrorCode::InvalidArgument, "qubit index " + std::to_string(qubit) +
                                         " out of range for n = " +
                                         std::to_string(sv.n));
  }
}

// Applies a 2x2 matrix across all amplitude pairs differing in `qubit`.
void apply_single_qubit(Statevector& sv, int qubit, cd m00, cd m01, cd m10,
                        cd m11) {
  check_qubit(sv, qubit);
  const std::uint64_t stride = std::uint64_t(1) << qubit;
  const std::uint64_t size = sv.amps.size();
  for (std::uint64_t base = 0; base < size; base += 2 * stride) {
    for (std::uint64_t offset = 0; offset < stride; ++offset) {
      const std::uint64_t i0 = base + offset;
      const std::uint64_t i1 = i0 + stride;
      const cd a0 = sv.amps[i0];
      const cd a1 = sv.amps[i1];
      sv.amps[i0] = m00 * a0 + m01 * a1;
      sv.amps[i1] = m10 * a0 + m11 * a1;
    }
  }
}

}  // namespace

double Statevector::norm_sq() const {
  double sum = 0.0;
  double carry = 0.0;
  for (const cd& a : amps) {
    const double term = std::norm(a) - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return sum;
}

Statevector init_uniform(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "need at least one qubit");
  if (n > qubit_cap()) {
    fail(ErrorCode::Resource, std::to_string(n) + " qubits exceed the cap of " +
                                  std::to_string(qubit_cap()));
  }
  Statevector sv;
  sv.n = n;
  const double amp = std::pow(2.0, -0.5 * n);
  sv.amps.assign(std::uint64_t(1) << n, cd(amp, 0.0));
  return sv;
}

Statevector init_warm_start(const WarmStartAngles& angles) {
  const int n = static_cast<int>(angles.thetas.size());
  if (n < 1) fail(ErrorCode::InvalidArgument, "need at least one angle");
  if (n > qubit_cap()) {
    fail(ErrorCode::Resource, std::to_string(n) + " qubits exceed the cap of " +
                                  std::to_string(qubit_cap()));
  }
  Statevector sv;
  sv.n = n;
  sv.amps.assign(std::uint64_t(1) << n, cd(0.0, 0.0));
  sv.amps[0] = cd(1.0, 0.0);
  // Product of per-qubit (cos(t/2), sin(t/2)) factors.
  for (int q = 0; q < n; ++q) {
    const double c = std::cos(0.5 * angles.thetas[q]);
    const double s = std::sin(0.5 * angles.thetas[q]);
    const std::uint64_t stride = std::uint64_t(1) << q;
    for (std::uint64_t base = 0; base < sv.amps.size(); base += 2 * stride) {
      for (std::uint64_t offset = 0; offset < stride; ++offset) {
        const cd a0 = sv.amps[base + offset];
        sv.amps[base + offset] = c * a0;
        sv.amps[base + offset + stride] = s * a0;
      }
    }
  }
  return sv;
}

void apply_rx(Statevector& sv, int qubit, double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  apply_single_qubit(sv, qubit, cd(c, 0), cd(0, -s), cd(0, -s), cd(c, 0));
}

void apply_ry(Statevector& sv, int qubit, double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  apply_single_qubit(sv, qubit, cd(c, 0), cd(-s, 0), cd(s, 0), cd(c, 0));
}

void apply_rz(Statevector& sv, int qubit, double angle) {
  const cd phase_lo = std::polar(1.0, -0.5 * angle);
  const cd phase_hi = std::polar(1.0, 0.5 * angle);
  apply_single_qubit(sv, qubit, phase_lo, cd(0, 0), cd(0, 0), phase_hi);
}

void apply_cost_phase(Statevector& sv, const CostDiagonal& diag, double alpha) {
  if (diag.n != sv.n) {
    fail(ErrorCode::InvalidArgument,
         "diagonal is over " + std::to_string(diag.n) + " qubits, state over " +
             std::to_string(sv.n));
  }
  const std::uint64_t size = sv.amps.size();
  for (std::uint64_t z = 0; z < size; ++z) {
    const double phase = -alpha * diag.energies[z];
    sv.amps[z] *= cd(std::cos(phase), std::sin(phase));
  }
}

void apply_warm_start_mixer(Statevector& sv, const WarmStartAngles& angles,
                            double beta) {
  if (static_cast<int>(angles.thetas.size()) != sv.n) {
    fail(ErrorCode::InvalidArgument, "angle count does not match qubit count");
  }
  // Per qubit: RY(theta) RZ(-2 beta) RY(-theta), fused into one 2x2 sweep.
  for (int q = 0; q < sv.n; ++q) {
    const double c = std::cos(0.5 * angles.thetas[q]);
    const double s = std::sin(0.5 * angles.thetas[q]);
    const cd plus = std::polar(1.0, beta);    // e^{+i beta}
    const cd minus = std::polar(1.0, -beta);  // e^{-i beta}
    const cd off = cd(0.0, 2.0 * c * s * std::sin(beta));
    apply_single_qubit(sv, q, c * c * plus + s * s * minus, off, off,
                       s * s * plus + c * c * minus);
  }
}

double expectation(const Statevector& sv, const CostDiagonal& diag) {
  if (diag.n != sv.n) {
    fail(ErrorCode::InvalidArgument,
         "diagonal is over " + std::to_string(diag.n) + " qubits, state over " +
             std::to_string(sv.n));
  }
  double sum = 0.0;
  double carry = 0.0;
  const std::uint64_t size = sv.amps.size();
  for (std::uint64_t z = 0; z < size; ++z) {
    const double term = std::norm(sv.amps[z]) * diag.energies[z] - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return sum;
}

SampleHistogram sample(const Statevector& sv, std::uint64_t shots,
                       std::uint64_t seed) {
  if (shots < 1) fail(ErrorCode::InvalidArgument, "shots must be >= 1");
  std::vector<double> cdf(sv.amps.size());
  double acc = 0.0;
  for (std::uint64_t z = 0; z < sv.amps.size(); ++z) {
    acc += std::norm(sv.amps[z]);
    cdf[z] = acc;
  }
  const double total = cdf.back();

  SampleHistogram hist;
  hist.shots = shots;
  std::mt19937_64 rng(mix_seed(seed, 0x5A17));
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = rand_unit(rng) * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::uint64_t z =
        it == cdf.end() ? cdf.size() - 1
                        : static_cast<std::uint64_t>(it - cdf.begin());
    ++hist.counts[z];
  }
  return hist;
}

}  // namespace dockclique
