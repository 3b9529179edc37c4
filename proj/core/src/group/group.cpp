#include "equiscore/group/group.hpp"

#include <cmath>
#include <stdexcept>

#include "equiscore/io.hpp"

namespace equiscore::group {

namespace {

constexpr double kOrthTol = 1e-10;
constexpr double kClosureTol = 1e-9;
constexpr double kIdentityTol = 1e-12;

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).lpNorm<Eigen::Infinity>();
}

}  // namespace

std::string GroupCheckReport::summary() const {
  auto line = [](const char* what, bool ok, double res) {
    return std::string(what) + (ok ? ": pass" : ": FAIL") +
           " (residual " + fmt_double(res) + ")";
  };
  return line("orthogonality", orthogonal, orthogonality_residual) + "; " +
         line("closure", closed, closure_residual) + "; " +
         line("inverses", has_inverses, inverse_residual) + "; " +
         line("identity", has_identity, identity_residual);
}

GroupCheckReport check_group(const GroupRep& rep) {
  GroupCheckReport r;
  int n = rep.order();
  int d = rep.dim;
  if (n == 0 || d == 0) return r;
  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);

  for (const auto& a : rep.elements)
    r.orthogonality_residual =
        std::max(r.orthogonality_residual, max_abs_diff(a.transpose() * a, eye));
  r.orthogonal = r.orthogonality_residual <= kOrthTol;

  // Closure and inverses by brute force over all pairs.
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      Eigen::MatrixXd prod = rep.elements[g] * rep.elements[h];
      double best = std::numeric_limits<double>::infinity();
      for (int k = 0; k < n; ++k) best = std::min(best, max_abs_diff(prod, rep.elements[k]));
      r.closure_residual = std::max(r.closure_residual, best);
    }
    double best_inv = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k)
      best_inv = std::min(best_inv, max_abs_diff(rep.elements[g].transpose(), rep.elements[k]));
    r.inverse_residual = std::max(r.inverse_residual, best_inv);
  }
  r.closed = r.closure_residual <= kClosureTol;
  r.has_inverses = r.inverse_residual <= kClosureTol;

  if (rep.identity_index >= 0 && rep.identity_index < n) {
    r.identity_residual = max_abs_diff(rep.elements[rep.identity_index], eye);
    r.has_identity = r.identity_residual <= kIdentityTol;
  }
  return r;
}

GroupRep make_group(std::vector<Eigen::MatrixXd> elements, std::string name) {
  if (elements.empty()) throw std::invalid_argument("make_group: no elements");
  GroupRep rep;
  rep.dim = static_cast<int>(elements.front().rows());
  for (const auto& a : elements)
    if (a.rows() != rep.dim || a.cols() != rep.dim)
      throw std::invalid_argument("make_group: ragged element shapes");
  rep.elements = std::move(elements);
  rep.name = std::move(name);

  // Locate the identity.
  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(rep.dim, rep.dim);
  rep.identity_index = -1;
  for (int k = 0; k < rep.order(); ++k) {
    if (max_abs_diff(rep.elements[k], eye) <= kIdentityTol) {
      rep.identity_index = k;
      break;
    }
  }
  GroupCheckReport report = check_group(rep);
  if (!report.pass())
    throw std::invalid_argument("make_group(" + rep.name + "): " + report.summary());
  return rep;
}

GroupRep make_cyclic_rotation_group(int k) {
  if (k < 1) throw std::invalid_argument("make_cyclic_rotation_group: k must be >= 1");
  auto snap = [](double v) {
    if (std::abs(v) < 1e-15) return 0.0;
    if (std::abs(v - 1.0) < 1e-15) return 1.0;
    if (std::abs(v + 1.0) < 1e-15) return -1.0;
    return v;
  };
  std::vector<Eigen::MatrixXd> elements;
  elements.reserve(k);
  for (int j = 0; j < k; ++j) {
    double angle = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(k);
    double c = snap(std::cos(angle)), s = snap(std::sin(angle));
    Eigen::MatrixXd a(2, 2);
    a << c, -s, s, c;
    elements.push_back(a);
  }
  return make_group(std::move(elements), "C" + std::to_string(k));
}

double symmetrize_function(const GroupRep& rep,
                           const std::function<double(const Eigen::VectorXd&)>& gamma,
                           const Eigen::VectorXd& x) {
  double acc = 0.0;
  for (const auto& a : rep.elements) {
    double v = gamma(a * x);
    if (!std::isfinite(v))
      throw std::runtime_error("symmetrize_function: non-finite value on orbit");
    acc += v;
  }
  return acc / static_cast<double>(rep.order());
}

targets::EmpiricalMeasure augment(const targets::EmpiricalMeasure& data, const GroupRep& rep) {
  data.validate();
  if (data.dim() != rep.dim)
    throw std::invalid_argument("augment: dimension mismatch");
  int n = data.size(), m = rep.order();
  targets::EmpiricalMeasure out;
  out.points.resize(data.dim(), static_cast<long>(n) * m);
  out.weights.resize(static_cast<long>(n) * m);
  for (int g = 0; g < m; ++g) {
    out.points.middleCols(static_cast<long>(g) * n, n) = rep.elements[g] * data.points;
    out.weights.segment(static_cast<long>(g) * n, n) = data.weights / static_cast<double>(m);
  }
  return out;
}

Eigen::VectorXd symmetrize_field(const GroupRep& rep, const VectorField& field,
                                 const Eigen::VectorXd& x, double t) {
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(rep.dim);
  for (const auto& a : rep.elements) acc.noalias() += a.transpose() * field(a * x, t);
  return acc / static_cast<double>(rep.order());
}

EquivariantWrapper equivariant_wrap(VectorField base, const GroupRep& rep) {
  return EquivariantWrapper{&rep, std::move(base)};
}

double dfe(const VectorField& field, const GroupRep& rep,
           const std::vector<SpaceTimeSample>& samples) {
  if (samples.empty()) throw std::invalid_argument("dfe: empty sample list");
  double total_weight = 0.0, acc = 0.0;
  for (const auto& s : samples) {
    Eigen::VectorXd gap = field(s.x, s.t) - symmetrize_field(rep, field, s.x, s.t);
    acc += s.weight * gap.squaredNorm();
    total_weight += s.weight;
  }
  if (total_weight <= 0.0) throw std::invalid_argument("dfe: non-positive total weight");
  return acc / total_weight;
}

}  // namespace equiscore::group
