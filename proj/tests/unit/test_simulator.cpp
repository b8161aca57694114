#include <doctest.h>

#include <cmath>
#include <random>

#include "core/errors.hpp"
#include "core/qubo.hpp"
#include "core/relax.hpp"
#include "core/rng.hpp"
#include "core/statevector.hpp"
#include "support/matrix_sim.hpp"

using namespace dockclique;

namespace {

const double kPi = std::acos(-1.0);

CostDiagonal random_diag(int n, std::mt19937_64& rng) {
  CostDiagonal diag;
  diag.n = n;
  diag.energies.resize(std::uint64_t(1) << n);
  for (double& e : diag.energies) e = rand_range(rng, -3.0, 3.0);
  return diag;
}

double max_amp_diff(const Statevector& sv, const refsim::Vector& ref) {
  double worst = 0.0;
  for (std::size_t z = 0; z < ref.size(); ++z)
    worst = std::max(worst, std::abs(sv.amps[z] - ref[z]));
  return worst;
}

}  // namespace

TEST_CASE("init_uniform: amplitudes and normalization") {
  const Statevector one = init_uniform(1);
  CHECK(one.amps[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(one.amps[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  const Statevector two = init_uniform(2);
  for (const auto& a : two.amps) CHECK(a == std::complex<double>(0.5, 0.0));

  const Statevector big = init_uniform(20);
  CHECK(std::abs(big.norm_sq() - 1.0) <= 1e-12);

  CHECK_THROWS_AS(init_uniform(0), Error);
  CHECK_THROWS_AS(init_uniform(64), Error);
}

TEST_CASE("init_warm_start: all pi/2 angles reproduce the uniform state") {
  WarmStartAngles angles;
  angles.thetas.assign(3, kPi / 2);
  const Statevector ws = init_warm_start(angles);
  const Statevector uniform = init_uniform(3);
  for (std::size_t z = 0; z < ws.amps.size(); ++z)
    CHECK(std::abs(ws.amps[z] - uniform.amps[z]) <= 1e-12);
}

TEST_CASE("init_warm_start: single qubit at pi/3 has P(1) = 1/4") {
  WarmStartAngles angles;
  angles.thetas = {kPi / 3};
  const Statevector sv = init_warm_start(angles);
  CHECK(std::norm(sv.amps[1]) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("init_warm_start: marginals equal the clipped values") {
  RelaxedSolution sol;
  sol.values = {0.1, 0.62, 0.9};
  const WarmStartAngles angles = to_warm_start_angles(sol, 0.25);
  const Statevector sv = init_warm_start(angles);
  for (int q = 0; q < 3; ++q) {
    double p1 = 0.0;
    for (std::uint64_t z = 0; z < sv.amps.size(); ++z)
      if (z >> q & 1) p1 += std::norm(sv.amps[z]);
    const double expected = std::clamp(sol.values[q], 0.25, 0.75);
    CHECK(p1 == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("rx(pi) flips |0> up to phase; ry(2pi) is -identity") {
  Statevector sv;
  sv.n = 1;
  sv.amps = {{1, 0}, {0, 0}};
  apply_rx(sv, 0, kPi);
  CHECK(std::abs(std::abs(sv.amps[1]) - 1.0) <= 1e-12);
  CHECK(std::abs(sv.amps[0]) <= 1e-12);

  Statevector st = init_uniform(2);
  const auto before = st.amps;
  apply_ry(st, 0, 2 * kPi);  // one full turn: global phase -1
  for (std::size_t z = 0; z < before.size(); ++z)
    CHECK(std::abs(st.amps[z] + before[z]) <= 1e-12);
}

TEST_CASE("gate kernels match the dense-matrix reference") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4;
    Statevector sv = init_uniform(n);
    refsim::Vector ref(sv.amps.begin(), sv.amps.end());
    for (int g = 0; g < 20; ++g) {
      const int qubit = static_cast<int>(rand_below(rng, n));
      const double angle = rand_range(rng, -2 * kPi, 2 * kPi);
      const int which = static_cast<int>(rand_below(rng, 3));
      refsim::Matrix gate;
      if (which == 0) {
        apply_rx(sv, qubit, angle);
        gate = refsim::rx(angle);
      } else if (which == 1) {
        apply_ry(sv, qubit, angle);
        gate = refsim::ry(angle);
      } else {
        apply_rz(sv, qubit, angle);
        gate = refsim::rz(angle);
      }
      ref = refsim::matvec(refsim::embed(gate, qubit, n), ref);
    }
    CHECK(max_amp_diff(sv, ref) <= 1e-9);
    CHECK(std::abs(sv.norm_sq() - 1.0) <= 1e-10);
  }
}

TEST_CASE("cost phase: identity at alpha = 0 and pure phases elsewhere") {
  std::mt19937_64 rng(113);
  const CostDiagonal diag = random_diag(3, rng);
  Statevector sv = init_uniform(3);
  const auto before = sv.amps;

  apply_cost_phase(sv, diag, 0.0);
  CHECK(sv.amps == before);

  apply_cost_phase(sv, diag, 0.7);
  for (std::uint64_t z = 0; z < sv.amps.size(); ++z) {
    // per-entry oracle
    const std::complex<double> expected =
        before[z] * std::polar(1.0, -0.7 * diag.energies[z]);
    CHECK(std::abs(sv.amps[z] - expected) <= 1e-12);
    CHECK(std::norm(sv.amps[z]) == doctest::Approx(std::norm(before[z])).epsilon(1e-12));
  }
}

TEST_CASE("cost phase: constant diagonal only shifts the global phase") {
  CostDiagonal diag;
  diag.n = 2;
  diag.energies.assign(4, 1.7);
  Statevector sv = init_uniform(2);
  const auto before = sv.amps;
  apply_cost_phase(sv, diag, 0.9);
  for (std::uint64_t z = 0; z < 4; ++z)
    CHECK(std::norm(sv.amps[z]) == doctest::Approx(std::norm(before[z])).epsilon(1e-14));
}

TEST_CASE("cost phase: dimension mismatch is rejected") {
  CostDiagonal diag;
  diag.n = 3;
  diag.energies.assign(8, 0.0);
  Statevector sv = init_uniform(2);
  CHECK_THROWS_AS(apply_cost_phase(sv, diag, 1.0), Error);
}

TEST_CASE("warm-start mixer: identity at beta = 0") {
  std::mt19937_64 rng(127);
  WarmStartAngles angles;
  for (int i = 0; i < 3; ++i) angles.thetas.push_back(rand_range(rng, 0.5, 2.5));
  Statevector sv = init_warm_start(angles);
  const auto before = sv.amps;
  apply_warm_start_mixer(sv, angles, 0.0);
  for (std::size_t z = 0; z < before.size(); ++z)
    CHECK(std::abs(sv.amps[z] - before[z]) <= 1e-12);
}

TEST_CASE("warm-start mixer: the warm-start state is a fixed point") {
  std::mt19937_64 rng(131);
  WarmStartAngles angles;
  for (int i = 0; i < 4; ++i) angles.thetas.push_back(rand_range(rng, 0.4, 2.6));
  const Statevector init = init_warm_start(angles);
  Statevector sv = init;
  apply_warm_start_mixer(sv, angles, 0.83);
  std::complex<double> overlap(0, 0);
  for (std::size_t z = 0; z < sv.amps.size(); ++z)
    overlap += std::conj(init.amps[z]) * sv.amps[z];
  CHECK(std::abs(std::abs(overlap) - 1.0) <= 1e-12);
}

TEST_CASE("warm-start mixer matches the dense 4x4 oracle") {
  std::mt19937_64 rng(137);
  WarmStartAngles angles;
  angles.thetas = {rand_range(rng, 0.3, 2.8), rand_range(rng, 0.3, 2.8)};
  const double beta = rand_range(rng, -2.0, 2.0);

  Statevector sv = init_uniform(2);
  apply_rz(sv, 0, 0.4);  // leave the fixed-point subspace
  refsim::Vector ref(sv.amps.begin(), sv.amps.end());

  apply_warm_start_mixer(sv, angles, beta);
  ref = refsim::matvec(refsim::warm_mixer_matrix(angles.thetas, beta), ref);
  CHECK(max_amp_diff(sv, ref) <= 1e-12);
}

TEST_CASE("expectation: uniform state averages the diagonal") {
  std::mt19937_64 rng(139);
  const CostDiagonal diag = random_diag(4, rng);
  const Statevector sv = init_uniform(4);
  double mean = 0.0;
  for (double e : diag.energies) mean += e / static_cast<double>(diag.energies.size());
  CHECK(expectation(sv, diag) == doctest::Approx(mean).epsilon(1e-12));
}

TEST_CASE("expectation: basis states read the diagonal exactly") {
  std::mt19937_64 rng(149);
  const CostDiagonal diag = random_diag(3, rng);
  for (std::uint64_t z = 0; z < 8; ++z) {
    Statevector sv;
    sv.n = 3;
    sv.amps.assign(8, {0, 0});
    sv.amps[z] = {1, 0};
    CHECK(expectation(sv, diag) == diag.energies[z]);
  }
}

TEST_CASE("expectation matches a naive summation oracle") {
  std::mt19937_64 rng(151);
  const CostDiagonal diag = random_diag(10, rng);
  Statevector sv = init_uniform(10);
  for (int g = 0; g < 30; ++g)
    apply_ry(sv, static_cast<int>(rand_below(rng, 10)), rand_range(rng, -3, 3));
  double naive = 0.0;
  for (std::uint64_t z = 0; z < sv.amps.size(); ++z)
    naive += std::norm(sv.amps[z]) * diag.energies[z];
  CHECK(expectation(sv, diag) == doctest::Approx(naive).epsilon(1e-10));
}

TEST_CASE("sample: basis state concentrates all shots") {
  Statevector sv;
  sv.n = 3;
  sv.amps.assign(8, {0, 0});
  sv.amps[5] = {1, 0};
  const SampleHistogram hist = sample(sv, 1000, 42);
  REQUIRE(hist.counts.size() == 1);
  CHECK(hist.counts.at(5) == 1000);
  CHECK(hist.shots == 1000);
}

TEST_CASE("sample: uniform two-qubit frequencies concentrate near 1/4") {
  const Statevector sv = init_uniform(2);
  const SampleHistogram hist = sample(sv, 100000, 7);
  std::uint64_t total = 0;
  for (const auto& [z, count] : hist.counts) {
    total += count;
    CHECK(std::abs(count / 100000.0 - 0.25) <= 0.01);
  }
  CHECK(total == hist.shots);
}

TEST_CASE("sample: deterministic per seed") {
  const Statevector sv = init_uniform(4);
  const SampleHistogram a = sample(sv, 5000, 99);
  const SampleHistogram b = sample(sv, 5000, 99);
  CHECK(a.counts == b.counts);
}

TEST_CASE("norm stays within 1e-10 over long random gate strings") {
  std::mt19937_64 rng(163);
  Statevector sv = init_uniform(8);
  for (int g = 0; g < 200; ++g) {
    const int qubit = static_cast<int>(rand_below(rng, 8));
    const double angle = rand_range(rng, -3.0, 3.0);
    switch (rand_below(rng, 3)) {
      case 0: apply_rx(sv, qubit, angle); break;
      case 1: apply_ry(sv, qubit, angle); break;
      default: apply_rz(sv, qubit, angle); break;
    }
    CHECK(std::abs(sv.norm_sq() - 1.0) <= 1e-10);
  }
}

TEST_CASE("parameter-shift rule agrees with finite differences at p = 1") {
  std::mt19937_64 rng(167);
  for (int trial = 0; trial < 2; ++trial) {
    const int n = 4 + trial;
    const CostDiagonal diag = random_diag(n, rng);
    const double alpha = rand_range(rng, -1.0, 1.0);
    const double beta = rand_range(rng, -1.0, 1.0);

    // E(alpha, beta_0..beta_{n-1}) with an independent RX angle per qubit.
    auto energy = [&](const std::vector<double>& betas) {
      Statevector sv = init_uniform(n);
      apply_cost_phase(sv, diag, alpha);
      for (int q = 0; q < n; ++q) apply_rx(sv, q, betas[q]);
      return expectation(sv, diag);
    };

    // dE/dbeta via the per-gate shift rule with r = 1/2 (shift pi/2).
    double shift_sum = 0.0;
    for (int q = 0; q < n; ++q) {
      std::vector<double> plus(n, beta), minus(n, beta);
      plus[q] += kPi / 2;
      minus[q] -= kPi / 2;
      shift_sum += 0.5 * (energy(plus) - energy(minus));
    }

    const double h = 1e-5;
    const double fd = (energy(std::vector<double>(n, beta + h)) -
                       energy(std::vector<double>(n, beta - h))) /
                      (2 * h);
    CHECK(std::abs(fd - shift_sum) <= 1e-5);
  }
}
