#pragma once

#include "equiscore/ndiff/net.hpp"

namespace equiscore::ndiff {

/// A differentiable scalar loss of a net's parameters. Concrete losses freeze
/// everything except the parameters at construction (minibatch points,
/// targets, weights), so value() is a pure deterministic function of the net
/// and can be probed by finite differences.
class ScalarLossGraph {
 public:
  virtual ~ScalarLossGraph() = default;

  virtual double value(const DenseNet& net) const = 0;

  // Accumulates d value / d params into tape and returns the value.
  virtual double value_and_grad(const DenseNet& net, GradientTape& tape) const = 0;
};

/// Evaluates the loss and its full parameter gradient. Throws
/// std::runtime_error if the loss is non-finite.
GradientTape loss_backward(const DenseNet& net, const ScalarLossGraph& loss);

}  // namespace equiscore::ndiff
