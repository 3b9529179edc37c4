#include "equiscore/ndiff/net.hpp"

#include <cmath>
#include <stdexcept>

#include "equiscore/rng.hpp"

namespace equiscore::ndiff {

namespace {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Elementwise activation applied in place, batched.
void apply_act(Activation a, Eigen::MatrixXd& m) {
  if (a == Activation::kSilu) {
    m = m.unaryExpr([](double x) { return x * sigmoid(x); });
  } else {
    m = m.unaryExpr([](double x) { return x > 0.0 ? x : kLeakyReluSlope * x; });
  }
}

Eigen::MatrixXd act_deriv_of(Activation a, const Eigen::MatrixXd& pre) {
  if (a == Activation::kSilu) {
    return pre.unaryExpr([](double x) {
      double s = sigmoid(x);
      return s * (1.0 + x * (1.0 - s));
    });
  }
  return pre.unaryExpr([](double x) { return x > 0.0 ? 1.0 : kLeakyReluSlope; });
}

Eigen::MatrixXd act_second_deriv_of(Activation a, const Eigen::MatrixXd& pre) {
  if (a == Activation::kSilu) {
    return pre.unaryExpr([](double x) {
      double s = sigmoid(x);
      return s * (1.0 - s) * (2.0 + x * (1.0 - 2.0 * s));
    });
  }
  return Eigen::MatrixXd::Zero(pre.rows(), pre.cols());
}

}  // namespace

std::string activation_name(Activation a) {
  return a == Activation::kSilu ? "silu" : "leaky_relu";
}

Activation activation_from_name(const std::string& name) {
  if (name == "silu") return Activation::kSilu;
  if (name == "leaky_relu") return Activation::kLeakyRelu;
  throw std::invalid_argument("unknown activation: " + name);
}

double act_value(Activation a, double x) {
  if (a == Activation::kSilu) return x * sigmoid(x);
  return x > 0.0 ? x : kLeakyReluSlope * x;
}

double act_deriv(Activation a, double x) {
  if (a == Activation::kSilu) {
    double s = sigmoid(x);
    return s * (1.0 + x * (1.0 - s));
  }
  return x > 0.0 ? 1.0 : kLeakyReluSlope;
}

double act_second_deriv(Activation a, double x) {
  if (a == Activation::kSilu) {
    double s = sigmoid(x);
    return s * (1.0 - s) * (2.0 + x * (1.0 - 2.0 * s));
  }
  return 0.0;
}

std::size_t DenseNet::parameter_count() const {
  std::size_t n = 0;
  for (int k = 0; k < n_layers(); ++k)
    n += static_cast<std::size_t>(weights[k].size()) + static_cast<std::size_t>(biases[k].size());
  return n;
}

DenseNet net_init(const std::vector<int>& widths, Activation activation,
                  std::uint64_t seed, bool spectral_norm_enabled) {
  if (widths.size() < 2) throw std::invalid_argument("net_init: need at least 2 widths");
  for (int w : widths)
    if (w <= 0) throw std::invalid_argument("net_init: widths must be positive");

  DenseNet net;
  net.widths = widths;
  net.activation = activation;
  net.spectral_norm_enabled = spectral_norm_enabled;

  Rng rng(seed);
  int layers = static_cast<int>(widths.size()) - 1;
  net.weights.reserve(layers);
  net.biases.reserve(layers);
  for (int k = 0; k < layers; ++k) {
    int rows = widths[k + 1], cols = widths[k];
    double scale = 1.0 / std::sqrt(static_cast<double>(cols));
    Eigen::MatrixXd w(rows, cols);
    for (int i = 0; i < rows; ++i)  // row-major draw order, documented
      for (int j = 0; j < cols; ++j) w(i, j) = rng.uniform(-scale, scale);
    net.weights.push_back(std::move(w));
    net.biases.push_back(Eigen::VectorXd::Zero(rows));
  }
  if (spectral_norm_enabled) {
    net.power_iter_u.reserve(layers);
    for (int k = 0; k < layers; ++k) {
      Eigen::VectorXd u = rng.normal_vector(widths[k + 1]);
      net.power_iter_u.push_back(u.normalized());
    }
  }
  return net;
}

GradientTape GradientTape::zeros(const DenseNet& net) {
  GradientTape tape;
  for (int k = 0; k < net.n_layers(); ++k) {
    tape.weight_grads.emplace_back(
        Eigen::MatrixXd::Zero(net.weights[k].rows(), net.weights[k].cols()));
    tape.bias_grads.emplace_back(Eigen::VectorXd::Zero(net.biases[k].size()));
  }
  return tape;
}

bool GradientTape::all_finite() const {
  for (const auto& g : weight_grads)
    if (!g.allFinite()) return false;
  for (const auto& g : bias_grads)
    if (!g.allFinite()) return false;
  return std::isfinite(loss);
}

void GradientTape::scale(double s) {
  for (auto& g : weight_grads) g *= s;
  for (auto& g : bias_grads) g *= s;
}

Eigen::MatrixXd net_forward_batch(const DenseNet& net, const Eigen::MatrixXd& inputs) {
  if (inputs.rows() != net.input_width())
    throw std::invalid_argument("net_forward: input width mismatch");
  Eigen::MatrixXd z = inputs;
  int last = net.n_layers() - 1;
  for (int k = 0; k <= last; ++k) {
    Eigen::MatrixXd a = (net.weights[k] * z).colwise() + net.biases[k];
    if (k < last) apply_act(net.activation, a);
    z = std::move(a);
  }
  return z;
}

Eigen::MatrixXd net_forward_batch(const DenseNet& net, const Eigen::MatrixXd& inputs,
                                  ForwardTrace& trace) {
  if (inputs.rows() != net.input_width())
    throw std::invalid_argument("net_forward: input width mismatch");
  int layers = net.n_layers();
  trace.layer_inputs.assign(layers, {});
  trace.preacts.assign(layers, {});
  Eigen::MatrixXd z = inputs;
  for (int k = 0; k < layers; ++k) {
    trace.layer_inputs[k] = z;
    Eigen::MatrixXd a = (net.weights[k] * z).colwise() + net.biases[k];
    trace.preacts[k] = a;
    if (k < layers - 1) apply_act(net.activation, a);
    z = std::move(a);
  }
  return z;
}

Eigen::VectorXd net_forward(const DenseNet& net, const Eigen::VectorXd& input) {
  return net_forward_batch(net, input);
}

Eigen::MatrixXd net_backward_batch(const DenseNet& net, const ForwardTrace& trace,
                                   const Eigen::MatrixXd& output_grads,
                                   GradientTape& tape) {
  int layers = net.n_layers();
  Eigen::MatrixXd g = output_grads;
  for (int k = layers - 1; k >= 0; --k) {
    Eigen::MatrixXd ga;
    if (k < layers - 1)
      ga = act_deriv_of(net.activation, trace.preacts[k]).cwiseProduct(g);
    else
      ga = std::move(g);
    tape.weight_grads[k].noalias() += ga * trace.layer_inputs[k].transpose();
    tape.bias_grads[k] += ga.rowwise().sum();
    g.noalias() = net.weights[k].transpose() * ga;
  }
  return g;
}

Eigen::MatrixXd net_jvp_batch(const DenseNet& net, const ForwardTrace& trace,
                              const Eigen::MatrixXd& input_tangents, JvpTrace& jtrace) {
  int layers = net.n_layers();
  jtrace.tangent_inputs.assign(layers, {});
  jtrace.tangent_preacts.assign(layers, {});
  Eigen::MatrixXd zd = input_tangents;
  for (int k = 0; k < layers; ++k) {
    jtrace.tangent_inputs[k] = zd;
    Eigen::MatrixXd ad = net.weights[k] * zd;
    jtrace.tangent_preacts[k] = ad;
    if (k < layers - 1)
      zd = act_deriv_of(net.activation, trace.preacts[k]).cwiseProduct(ad);
    else
      zd = std::move(ad);
  }
  return zd;
}

void net_jvp_backward_batch(const DenseNet& net, const ForwardTrace& trace,
                            const JvpTrace& jtrace, const Eigen::MatrixXd& output_grads,
                            const Eigen::MatrixXd& tangent_output_grads,
                            GradientTape& tape) {
  int layers = net.n_layers();
  Eigen::MatrixXd gz = output_grads;
  Eigen::MatrixXd gzd = tangent_output_grads;
  for (int k = layers - 1; k >= 0; --k) {
    Eigen::MatrixXd ga, gad;
    if (k < layers - 1) {
      Eigen::MatrixXd d1 = act_deriv_of(net.activation, trace.preacts[k]);
      Eigen::MatrixXd d2 = act_second_deriv_of(net.activation, trace.preacts[k]);
      // z_{k+1} = act(a_k), zdot_{k+1} = act'(a_k) . adot_k:
      // the preact adjoint picks up the curvature term through zdot.
      ga = d1.cwiseProduct(gz) + d2.cwiseProduct(jtrace.tangent_preacts[k]).cwiseProduct(gzd);
      gad = d1.cwiseProduct(gzd);
    } else {
      ga = std::move(gz);
      gad = std::move(gzd);
    }
    tape.weight_grads[k].noalias() += ga * trace.layer_inputs[k].transpose();
    tape.weight_grads[k].noalias() += gad * jtrace.tangent_inputs[k].transpose();
    tape.bias_grads[k] += ga.rowwise().sum();
    gz.noalias() = net.weights[k].transpose() * ga;
    gzd.noalias() = net.weights[k].transpose() * gad;
  }
}

Eigen::VectorXd divergence_batch(const DenseNet& net, const Eigen::MatrixXd& x,
                                 const Eigen::MatrixXd& t_features) {
  int d = static_cast<int>(x.rows());
  long n = x.cols();
  if (net.output_width() != d)
    throw std::invalid_argument("divergence: net output width must equal point dim");
  if (d + t_features.rows() != net.input_width())
    throw std::invalid_argument("divergence: input width mismatch");

  Eigen::MatrixXd inputs(net.input_width(), n);
  inputs.topRows(d) = x;
  if (t_features.rows() > 0) inputs.bottomRows(t_features.rows()) = t_features;

  ForwardTrace trace;
  net_forward_batch(net, inputs, trace);

  Eigen::VectorXd div = Eigen::VectorXd::Zero(n);
  Eigen::MatrixXd tangent = Eigen::MatrixXd::Zero(net.input_width(), n);
  for (int j = 0; j < d; ++j) {
    tangent.row(j).setOnes();
    JvpTrace jtrace;
    Eigen::MatrixXd ydot = net_jvp_batch(net, trace, tangent, jtrace);
    div += ydot.row(j).transpose();
    tangent.row(j).setZero();
  }
  return div;
}

double divergence(const DenseNet& net, const Eigen::VectorXd& x,
                  const Eigen::VectorXd& t_features) {
  return divergence_batch(net, x, t_features)(0);
}

}  // namespace equiscore::ndiff
