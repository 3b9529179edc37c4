#pragma once

#include <string>

#include <Eigen/Core>

namespace equiscore::targets {

/// Finite weighted point set; weights sum to 1. Columns of `points` are the
/// atoms.
struct EmpiricalMeasure {
  Eigen::MatrixXd points;   // d x n
  Eigen::VectorXd weights;  // n, non-negative, sums to 1

  int dim() const { return static_cast<int>(points.rows()); }
  int size() const { return static_cast<int>(points.cols()); }

  // Uniform weights 1/n over the given points.
  static EmpiricalMeasure uniform(Eigen::MatrixXd pts);

  // Throws std::invalid_argument on inconsistent sizes, non-finite points,
  // negative weights, or total mass off 1 by more than 1e-12.
  void validate() const;

  Eigen::VectorXd mean() const;

  // CSV with header "x1,...,xd,weight", one point per row.
  std::string to_csv() const;
  static EmpiricalMeasure from_csv(const std::string& text);
};

}  // namespace equiscore::targets
