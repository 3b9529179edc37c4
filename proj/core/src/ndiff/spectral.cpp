#include "equiscore/ndiff/spectral.hpp"

#include <stdexcept>

namespace equiscore::ndiff {

double estimate_leading_singular_value(const Eigen::MatrixXd& w, int n_power_iters,
                                       Eigen::VectorXd& u) {
  double wnorm = w.lpNorm<Eigen::Infinity>();
  if (wnorm == 0.0) return 0.0;
  Eigen::VectorXd v;
  for (int it = 0; it < n_power_iters; ++it) {
    v = w.transpose() * u;
    double vn = v.norm();
    if (vn == 0.0) return 0.0;
    v /= vn;
    u = w * v;
    double un = u.norm();
    if (un == 0.0) return 0.0;
    u /= un;
  }
  return (w.transpose() * u).norm();
}

void spectral_normalize(DenseNet& net, int n_power_iters) {
  if (!net.spectral_norm_enabled)
    throw std::invalid_argument("spectral_normalize: net was built without spectral norm state");
  if (n_power_iters < 1)
    throw std::invalid_argument("spectral_normalize: need at least one power iteration");
  for (int k = 0; k < net.n_layers(); ++k) {
    double sigma = estimate_leading_singular_value(net.weights[k], n_power_iters,
                                                   net.power_iter_u[k]);
    if (sigma > 0.0) net.weights[k] /= sigma;
  }
}

}  // namespace equiscore::ndiff
