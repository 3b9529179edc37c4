#include "equiscore/ndiff/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace equiscore::ndiff {

OptimizerState OptimizerState::create(const OptimizerConfig& config, const DenseNet& net) {
  if (config.learning_rate <= 0.0)
    throw std::invalid_argument("optimizer: learning rate must be positive");
  OptimizerState st;
  st.config = config;
  if (config.kind == OptimizerKind::kAdam) {
    for (int k = 0; k < net.n_layers(); ++k) {
      st.m_weights.emplace_back(Eigen::MatrixXd::Zero(net.weights[k].rows(), net.weights[k].cols()));
      st.v_weights.emplace_back(Eigen::MatrixXd::Zero(net.weights[k].rows(), net.weights[k].cols()));
      st.m_biases.emplace_back(Eigen::VectorXd::Zero(net.biases[k].size()));
      st.v_biases.emplace_back(Eigen::VectorXd::Zero(net.biases[k].size()));
    }
  }
  return st;
}

bool optimizer_step(DenseNet& net, const GradientTape& tape, OptimizerState& state) {
  if (tape.weight_grads.size() != static_cast<std::size_t>(net.n_layers()))
    throw std::invalid_argument("optimizer_step: tape/net layer mismatch");
  if (!tape.all_finite()) return false;

  const OptimizerConfig& cfg = state.config;
  state.step_count += 1;

  if (cfg.kind == OptimizerKind::kSgd) {
    for (int k = 0; k < net.n_layers(); ++k) {
      net.weights[k] -= cfg.learning_rate * tape.weight_grads[k];
      net.biases[k] -= cfg.learning_rate * tape.bias_grads[k];
    }
    return true;
  }

  double t = static_cast<double>(state.step_count);
  double bc1 = 1.0 - std::pow(cfg.beta1, t);
  double bc2 = 1.0 - std::pow(cfg.beta2, t);
  for (int k = 0; k < net.n_layers(); ++k) {
    auto adam = [&](auto& m, auto& v, const auto& g, auto& param) {
      m = cfg.beta1 * m + (1.0 - cfg.beta1) * g;
      v = cfg.beta2 * v + (1.0 - cfg.beta2) * g.cwiseProduct(g);
      auto m_hat = m / bc1;
      auto v_hat = v / bc2;
      param.array() -=
          cfg.learning_rate * m_hat.array() / (v_hat.array().sqrt() + cfg.eps);
    };
    adam(state.m_weights[k], state.v_weights[k], tape.weight_grads[k], net.weights[k]);
    adam(state.m_biases[k], state.v_biases[k], tape.bias_grads[k], net.biases[k]);
  }
  return true;
}

}  // namespace equiscore::ndiff
