#pragma once

#include "equiscore/ndiff/net.hpp"

namespace equiscore::ndiff {

enum class OptimizerKind { kSgd, kAdam };

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::kAdam;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct OptimizerState {
  OptimizerConfig config;
  long step_count = 0;
  // First/second moment accumulators; allocated lazily for the Adam kind.
  std::vector<Eigen::MatrixXd> m_weights, v_weights;
  std::vector<Eigen::VectorXd> m_biases, v_biases;

  static OptimizerState create(const OptimizerConfig& config, const DenseNet& net);
};

/// Applies one update in place. Returns false (net and step count untouched)
/// if the tape holds any non-finite gradient.
bool optimizer_step(DenseNet& net, const GradientTape& tape, OptimizerState& state);

}  // namespace equiscore::ndiff
