#pragma once

#include <optional>
#include <span>
#include <string>

#include "core/qubo.hpp"
#include "core/relax.hpp"
#include "core/statevector.hpp"

namespace dockclique {

/// The four circuit families. A layer is U_C(alpha), then the mixer with
/// beta, then (for the DC families) a counterdiabatic RY(gamma) on every
/// qubit. Warm-start families start from the warm-start product state and use
/// the rotated mixer; the others start from |+>^n and mix with RX(beta).
enum class AnsatzFamily { Conventional, DCQaoa, WarmStart, WarmStartDC };

std::string family_name(AnsatzFamily family);

struct AnsatzConfig {
  AnsatzFamily family = AnsatzFamily::Conventional;
  int layers = 1;
  std::optional<WarmStartAngles> warm_start;

  bool includes_cd() const {
    return family == AnsatzFamily::DCQaoa || family == AnsatzFamily::WarmStartDC;
  }
  bool is_warm_start() const {
    return family == AnsatzFamily::WarmStart || family == AnsatzFamily::WarmStartDC;
  }
  /// Per-layer parameter layout: [alpha, beta] or [alpha, beta, gamma].
  int params_per_layer() const { return includes_cd() ? 3 : 2; }
  int param_count() const { return layers * params_per_layer(); }

  /// Throws on missing/mismatched warm-start angles or layers < 1.
  void validate(int n) const;
};

Statevector prepare_initial(const AnsatzConfig& config, int n);

void apply_layer(Statevector& sv, const AnsatzConfig& config,
                 const CostDiagonal& diag, std::span<const double> layer_params);

/// Initial state plus all p layers.
Statevector prepare_state(const AnsatzConfig& config, const CostDiagonal& diag,
                          std::span<const double> params);

double evaluate(const AnsatzConfig& config, const CostDiagonal& diag,
                std::span<const double> params);

}  // namespace dockclique
