#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace equiscore::ndiff {

// Hidden-layer nonlinearity. Silu is smooth (needed wherever a divergence is
// taken); LeakyRelu has slope <= 1, so a spectral-normalized net stays
// 1-Lipschitz per layer.
enum class Activation { kSilu, kLeakyRelu };

std::string activation_name(Activation a);
Activation activation_from_name(const std::string& name);

constexpr double kLeakyReluSlope = 0.2;

/// Fully-connected net. Layer k maps widths[k] -> widths[k+1] via
/// W[k] * z + b[k]; the activation is applied after every layer except the
/// last. Plain value type: copy freely, evaluate from any thread.
struct DenseNet {
  std::vector<int> widths;
  std::vector<Eigen::MatrixXd> weights;  // weights[k] is widths[k+1] x widths[k]
  std::vector<Eigen::VectorXd> biases;
  Activation activation = Activation::kSilu;
  bool spectral_norm_enabled = false;
  std::vector<Eigen::VectorXd> power_iter_u;  // per layer, unit norm; only if enabled

  int n_layers() const { return static_cast<int>(weights.size()); }
  int input_width() const { return widths.front(); }
  int output_width() const { return widths.back(); }
  std::size_t parameter_count() const;
};

/// Random net: W[k] uniform on +-1/sqrt(widths[k]), biases zero. Identical
/// (widths, activation, seed) give bit-identical parameters.
DenseNet net_init(const std::vector<int>& widths, Activation activation,
                  std::uint64_t seed, bool spectral_norm_enabled = false);

// Parameter-shaped gradient accumulator produced by backward passes.
struct GradientTape {
  std::vector<Eigen::MatrixXd> weight_grads;
  std::vector<Eigen::VectorXd> bias_grads;
  double loss = 0.0;

  static GradientTape zeros(const DenseNet& net);
  bool all_finite() const;
  void scale(double s);
};

Eigen::VectorXd net_forward(const DenseNet& net, const Eigen::VectorXd& input);

// Batched evaluation; columns are samples.
Eigen::MatrixXd net_forward_batch(const DenseNet& net, const Eigen::MatrixXd& inputs);

// Saved intermediate state of a batched forward pass.
struct ForwardTrace {
  std::vector<Eigen::MatrixXd> layer_inputs;  // z_k for every layer
  std::vector<Eigen::MatrixXd> preacts;       // a_k = W_k z_k + b_k for every layer
};

Eigen::MatrixXd net_forward_batch(const DenseNet& net, const Eigen::MatrixXd& inputs,
                                  ForwardTrace& trace);

/// Reverse pass: accumulates d(sum_j loss_j)/d(params) into `tape` given
/// per-sample output adjoints (columns of `output_grads`); returns the input
/// adjoints.
Eigen::MatrixXd net_backward_batch(const DenseNet& net, const ForwardTrace& trace,
                                   const Eigen::MatrixXd& output_grads,
                                   GradientTape& tape);

// Tangent state of a forward-mode (JVP) pass layered on a primal trace.
struct JvpTrace {
  std::vector<Eigen::MatrixXd> tangent_inputs;   // zdot_k
  std::vector<Eigen::MatrixXd> tangent_preacts;  // adot_k = W_k zdot_k
};

/// Directional derivative of the net output along per-sample input tangents:
/// returns J_f(x_i) v_i for each column. Exact, one extra pass.
Eigen::MatrixXd net_jvp_batch(const DenseNet& net, const ForwardTrace& trace,
                              const Eigen::MatrixXd& input_tangents, JvpTrace& jtrace);

/// Reverse pass through forward(x) and jvp(x, v) jointly: accumulates the
/// parameter gradient of sum_i [gy_i . y_i + gydot_i . ydot_i]. Needs the
/// activation's second derivative, hence a smooth activation.
void net_jvp_backward_batch(const DenseNet& net, const ForwardTrace& trace,
                            const JvpTrace& jtrace, const Eigen::MatrixXd& output_grads,
                            const Eigen::MatrixXd& tangent_output_grads,
                            GradientTape& tape);

/// Divergence of the vector field x -> net([x; t_features]) with respect to
/// the x block, computed exactly by one JVP pass per coordinate axis.
double divergence(const DenseNet& net, const Eigen::VectorXd& x,
                  const Eigen::VectorXd& t_features);

/// Batched divergence: column i of `x` paired with column i of `t_features`.
Eigen::VectorXd divergence_batch(const DenseNet& net, const Eigen::MatrixXd& x,
                                 const Eigen::MatrixXd& t_features);

// Activation kernels (exposed for tests).
double act_value(Activation a, double x);
double act_deriv(Activation a, double x);
double act_second_deriv(Activation a, double x);

}  // namespace equiscore::ndiff
