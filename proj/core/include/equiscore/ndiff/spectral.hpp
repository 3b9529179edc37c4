#pragma once

#include "equiscore/ndiff/net.hpp"

namespace equiscore::ndiff {

/// One power-iteration estimate of the leading singular value of `w`,
/// warm-started from and updating the left vector `u`.
double estimate_leading_singular_value(const Eigen::MatrixXd& w, int n_power_iters,
                                       Eigen::VectorXd& u);

/// Divides every weight matrix by its estimated leading singular value
/// (zero matrices are left alone). Warm-starts from the stored per-layer
/// power-iteration vectors and updates them in place. Requires
/// spectral_norm_enabled.
void spectral_normalize(DenseNet& net, int n_power_iters);

}  // namespace equiscore::ndiff
