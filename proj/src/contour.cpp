#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bzeta/errors.hpp"
#include "bzeta/numerics.hpp"

namespace bzeta {

void ContourSpec::validate() const {
  if (!(radius > 0.0)) throw ArgumentError("ContourSpec: radius must be positive");
  if (max_order < 0) throw ArgumentError("ContourSpec: max_order must be non-negative");
  if (nodes < 4 || (nodes & (nodes - 1)) != 0) {
    throw ArgumentError("ContourSpec: nodes must be a power of two");
  }
  if (nodes < 4 * (max_order + 1)) {
    throw ArgumentError("ContourSpec: nodes must be >= 4 * (max_order + 1)");
  }
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    carry_ += (sum_ - t) + x;
  } else {
    carry_ += (x - t) + sum_;
  }
  sum_ = t;
}

ComplexValue pochhammer(ComplexValue s, int n) {
  ComplexValue r = 1.0;
  for (int i = 0; i < n; ++i) r *= s + static_cast<double>(i);
  return r;
}

ContourCoefficients contour_coefficients(const ComplexFunction& f, const ContourSpec& spec,
                                         int pole_order, Symmetry symmetry) {
  spec.validate();
  if (pole_order < 0 || pole_order > 1) {
    throw ArgumentError("contour_coefficients: pole_order must be 0 or 1");
  }
  if (symmetry == Symmetry::conjugate && spec.center.imag() != 0.0) {
    throw ArgumentError("contour_coefficients: conjugate symmetry needs a real center");
  }
  const int n = spec.nodes;
  std::vector<ComplexValue> values(static_cast<std::size_t>(n));
  std::vector<ComplexValue> units(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n;
    units[j] = {std::cos(theta), std::sin(theta)};
  }
  const int evaluated = symmetry == Symmetry::conjugate ? n / 2 + 1 : n;
  double max_abs = 0.0;
  for (int j = 0; j < evaluated; ++j) {
    const ComplexValue z = spec.center + spec.radius * units[j];
    const ComplexValue fz = f(z);
    if (!is_finite(fz)) {
      throw EvaluationError("contour_coefficients: non-finite value at node " + std::to_string(j));
    }
    values[j] = fz;
    max_abs = std::max(max_abs, std::abs(fz));
  }
  if (symmetry == Symmetry::conjugate) {
    for (int j = evaluated; j < n; ++j) values[j] = std::conj(values[n - j]);
    values[0].imag(0.0);
    values[n / 2].imag(0.0);
  }

  ContourCoefficients out;
  out.lowest_order = -pole_order;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int k = -pole_order; k <= spec.max_order; ++k) {
    // c_k = (1/N) sum_j f(z_j) e^{-i k theta_j} r^{-k}
    ComplexValue full{}, half{};
    for (int j = 0; j < n; ++j) {
      const int idx = static_cast<int>((static_cast<long long>(k) * j % n + n) % n);
      const ComplexValue term = values[j] * std::conj(units[idx]);
      full += term;
      if (j % 2 == 0) half += term;
    }
    const double scale = std::pow(spec.radius, -k);
    full *= scale / n;
    half *= scale / (n / 2);
    out.values.push_back(full);
    out.errors.push_back(std::abs(full - half) + 8.0 * eps * max_abs * scale);
  }
  return out;
}

}  // namespace bzeta
