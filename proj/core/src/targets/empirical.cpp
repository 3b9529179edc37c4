#include "equiscore/targets/empirical.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "equiscore/io.hpp"

namespace equiscore::targets {

EmpiricalMeasure EmpiricalMeasure::uniform(Eigen::MatrixXd pts) {
  EmpiricalMeasure m;
  long n = pts.cols();
  if (n == 0) throw std::invalid_argument("EmpiricalMeasure: empty point set");
  m.points = std::move(pts);
  m.weights = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  return m;
}

void EmpiricalMeasure::validate() const {
  if (points.cols() == 0) throw std::invalid_argument("EmpiricalMeasure: empty point set");
  if (weights.size() != points.cols())
    throw std::invalid_argument("EmpiricalMeasure: weight/point count mismatch");
  if (!points.allFinite()) throw std::invalid_argument("EmpiricalMeasure: non-finite point");
  if ((weights.array() < 0.0).any())
    throw std::invalid_argument("EmpiricalMeasure: negative weight");
  if (std::abs(weights.sum() - 1.0) > 1e-12)
    throw std::invalid_argument("EmpiricalMeasure: weights must sum to 1");
}

Eigen::VectorXd EmpiricalMeasure::mean() const { return points * weights; }

std::string EmpiricalMeasure::to_csv() const {
  std::string out;
  for (int j = 0; j < dim(); ++j) out += "x" + std::to_string(j + 1) + ",";
  out += "weight\n";
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < dim(); ++j) out += fmt_double(points(j, i)) + ",";
    out += fmt_double(weights[i]) + "\n";
  }
  return out;
}

EmpiricalMeasure EmpiricalMeasure::from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("EmpiricalMeasure: empty CSV");
  int ncols = 1;
  for (char c : line)
    if (c == ',') ++ncols;
  int d = ncols - 1;
  if (d < 1) throw std::invalid_argument("EmpiricalMeasure: CSV needs x columns and a weight");

  std::vector<double> values;
  int rows = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    int got = 0;
    while (std::getline(ls, field, ',')) {
      values.push_back(std::strtod(field.c_str(), nullptr));
      ++got;
    }
    if (got != ncols) throw std::invalid_argument("EmpiricalMeasure: ragged CSV row");
    ++rows;
  }
  EmpiricalMeasure m;
  m.points.resize(d, rows);
  m.weights.resize(rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < d; ++j) m.points(j, i) = values[static_cast<std::size_t>(i) * ncols + j];
    m.weights[i] = values[static_cast<std::size_t>(i) * ncols + d];
  }
  m.validate();
  return m;
}

}  // namespace equiscore::targets
