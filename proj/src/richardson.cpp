#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "bzeta/errors.hpp"
#include "bzeta/numerics.hpp"

namespace bzeta {

namespace {

// Basis function number `index` (0-based) in decreasing order of size:
// log^p(m)/m, ..., 1/m, log^p(m)/m^2, ...
double basis(int index, int log_power, double m) {
  const int per_order = log_power + 1;
  const int j = index / per_order + 1;
  const int i = log_power - index % per_order;
  return std::pow(std::log(m), i) / std::pow(m, j);
}

// Solves y_r = L + sum_{b < terms} c_b basis_b(m_r) on the last terms + 1 samples.
double solve_limit(std::span<const Sample> samples, int log_power, int terms) {
  const auto rows = static_cast<Eigen::Index>(terms + 1);
  const std::size_t first = samples.size() - static_cast<std::size_t>(rows);
  Eigen::MatrixXd design(rows, rows);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Sample& sample = samples[first + static_cast<std::size_t>(r)];
    design(r, 0) = 1.0;
    for (int b = 0; b < terms; ++b) design(r, b + 1) = basis(b, log_power, sample.m);
    rhs(r) = sample.y;
  }
  // Column equilibration keeps the decaying basis columns comparable.
  Eigen::VectorXd scale(rows);
  for (Eigen::Index c = 0; c < rows; ++c) {
    const double norm = design.col(c).cwiseAbs().maxCoeff();
    scale(c) = norm > 0.0 ? norm : 1.0;
    design.col(c) /= scale(c);
  }
  const Eigen::VectorXd coeffs = design.colPivHouseholderQr().solve(rhs);
  return coeffs(0) / scale(0);
}

}  // namespace

Extrapolation richardson_extrapolate(std::span<const Sample> samples, int log_power,
                                     int max_terms) {
  if (samples.size() < 3) throw ArgumentError("richardson_extrapolate: need at least 3 samples");
  if (log_power < 0) throw ArgumentError("richardson_extrapolate: log_power must be >= 0");
  if (max_terms < 2) throw ArgumentError("richardson_extrapolate: max_terms must be >= 2");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].m > samples[i - 1].m) || !(samples[0].m > 1.0)) {
      throw ArgumentError("richardson_extrapolate: abscissae must increase and exceed 1");
    }
  }
  const int terms = std::min(static_cast<int>(samples.size()) - 1, max_terms);
  const double limit = solve_limit(samples, log_power, terms);
  const double previous = solve_limit(samples, log_power, terms - 1);
  return {limit, std::abs(limit - previous)};
}

}  // namespace bzeta
