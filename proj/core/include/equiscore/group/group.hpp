#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "equiscore/targets/empirical.hpp"

namespace equiscore::group {

/// Finite group of orthogonal matrices acting linearly on R^d. Haar measure
/// is the uniform weight 1/|G| over `elements`; element order is canonical
/// (identity first) so group sums are bitwise reproducible.
struct GroupRep {
  int dim = 0;
  std::vector<Eigen::MatrixXd> elements;
  int identity_index = 0;
  std::string name;

  int order() const { return static_cast<int>(elements.size()); }
};

struct GroupCheckReport {
  bool orthogonal = false, closed = false, has_inverses = false, has_identity = false;
  double orthogonality_residual = 0.0;
  double closure_residual = 0.0;
  double inverse_residual = 0.0;
  double identity_residual = 0.0;

  bool pass() const { return orthogonal && closed && has_inverses && has_identity; }
  std::string summary() const;
};

/// Orthogonality within 1e-10, closure/inverses within 1e-9, identity within
/// 1e-12; residuals are worst-case max-norm gaps.
GroupCheckReport check_group(const GroupRep& rep);

/// Validates and returns the group; throws std::invalid_argument with the
/// report summary if any check fails.
GroupRep make_group(std::vector<Eigen::MatrixXd> elements, std::string name);

/// Planar rotations by 2*pi*j/k, j = 0..k-1, identity first. Entries within
/// 1e-15 of {-1, 0, 1} are snapped exactly, so C4 is integer-valued.
GroupRep make_cyclic_rotation_group(int k);

/// S_G: averages gamma over the orbit of x. The result is exactly
/// G-invariant as a function of x.
double symmetrize_function(const GroupRep& rep,
                           const std::function<double(const Eigen::VectorXd&)>& gamma,
                           const Eigen::VectorXd& x);

/// S^G on empirical measures, i.e. data augmentation: |G|*N points
/// {A_g z_i}, weights w_i/|G|. Element-major point order (all images under
/// g0 first, then g1, ...).
targets::EmpiricalMeasure augment(const targets::EmpiricalMeasure& data, const GroupRep& rep);

// Time-dependent vector field on R^d.
using VectorField = std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)>;

/// S_G^E[s](x,t) = (1/|G|) sum_g A_g^T s(A_g x, t).
Eigen::VectorXd symmetrize_field(const GroupRep& rep, const VectorField& field,
                                 const Eigen::VectorXd& x, double t);

/// Group-averaged field; evaluation is exactly G-equivariant and a fixed
/// point on already-equivariant inputs.
struct EquivariantWrapper {
  const GroupRep* rep;
  VectorField base;

  Eigen::VectorXd operator()(const Eigen::VectorXd& x, double t) const {
    return symmetrize_field(*rep, base, x, t);
  }
};

EquivariantWrapper equivariant_wrap(VectorField base, const GroupRep& rep);

struct SpaceTimeSample {
  Eigen::VectorXd x;
  double t = 0.0;
  double weight = 1.0;
};

/// Deviation from equivariance: weighted average of
/// |s(x,t) - S_G^E[s](x,t)|^2 over the samples. Zero iff the field agrees
/// with its symmetrization on the support. Samples should come from a
/// G-invariant space-time measure (augment them to guarantee it).
double dfe(const VectorField& field, const GroupRep& rep,
           const std::vector<SpaceTimeSample>& samples);

}  // namespace equiscore::group
