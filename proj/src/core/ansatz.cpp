#include "core/ansatz.hpp"

#include "core/errors.hpp"

namespace dockclique {

std::string family_name(AnsatzFamily family) {
  switch (family) {
    case AnsatzFamily::Conventional:
      return "conventional";
    case AnsatzFamily::DCQaoa:
      return "dc";
    case AnsatzFamily::WarmStart:
      return "ws";
    case AnsatzFamily::WarmStartDC:
      return "wsdc";
  }
  return "conventional";
}

void AnsatzConfig::validate(int n) const {
  if (layers < 1) fail(ErrorCode::InvalidArgument, "layers must be >= 1");
  if (is_warm_start()) {
    if (!warm_start.has_value()) {
      fail(ErrorCode::InvalidArgument,
           family_name(family) + " ansatz requires warm-start angles");
    }
    if (static_cast<int>(warm_start->thetas.size()) != n) {
      fail(ErrorCode::InvalidArgument,
           "warm-start angles cover " + std::to_string(warm_start->thetas.size()) +
               " qubits, problem has " + std::to_string(n));
    }
  }
}

Statevector prepare_initial(const AnsatzConfig& config, int n) {
  config.validate(n);
  if (config.is_warm_start()) return init_warm_start(*config.warm_start);
  return init_uniform(n);
}

void apply_layer(Statevector& sv, const AnsatzConfig& config,
                 const CostDiagonal& diag, std::span<const double> layer_params) {
  if (static_cast<int>(layer_params.size()) != config.params_per_layer()) {
    fail(ErrorCode::InvalidArgument,
         "layer expects " + std::to_string(config.params_per_layer()) +
             " parameters, got " + std::to_string(layer_params.size()));
  }
  const double alpha = layer_params[0];
  const double beta = layer_params[1];

  apply_cost_phase(sv, diag, alpha);
  if (config.is_warm_start()) {
    apply_warm_start_mixer(sv, *config.warm_start, beta);
  } else {
    for (int q = 0; q < sv.n; ++q) apply_rx(sv, q, beta);
  }
  if (config.includes_cd()) {
    const double gamma = layer_params[2];
    for (int q = 0; q < sv.n; ++q) apply_ry(sv, q, gamma);
  }
}

Statevector prepare_state(const AnsatzConfig& config, const CostDiagonal& diag,
                          std::span<const double> params) {
  if (static_cast<int>(params.size()) != config.param_count()) {
    fail(ErrorCode::InvalidArgument,
         "expected " + std::to_string(config.param_count()) +
             " parameters (" + std::to_string(config.layers) + " layers x " +
             std::to_string(config.params_per_layer()) + "), got " +
             std::to_string(params.size()));
  }
  Statevector sv = prepare_initial(config, diag.n);
  const int stride = config.params_per_layer();
  for (int layer = 0; layer < config.layers; ++layer) {
    apply_layer(sv, config, diag, params.subspan(layer * stride, stride));
  }
  return sv;
}

double evaluate(const AnsatzConfig& config, const CostDiagonal& diag,
                std::span<const double> params) {
  const Statevector sv = prepare_state(config, diag, params);
  return expectation(sv, diag);
}

}  // namespace dockclique
