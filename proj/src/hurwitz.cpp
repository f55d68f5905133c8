#include <algorithm>
#include <cmath>
#include <limits>

#include "bzeta/errors.hpp"
#include "bzeta/hurwitz.hpp"

namespace bzeta {

void EvalConfig::validate() const {
  if (direct_M < 8) throw ArgumentError("EvalConfig: direct_M must be >= 8");
  if (em_order < 1 || em_order > 32) throw ArgumentError("EvalConfig: em_order must lie in 1..32");
  if (!(fd_step > 0.0)) throw ArgumentError("EvalConfig: fd_step must be positive");
  quad.validate();
  contour.validate();
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

Estimate hurwitz_zeta_estimate(ComplexValue s, double a, const EvalConfig& cfg) {
  if (!(a > 0.0) || !std::isfinite(a)) throw ArgumentError("hurwitz_zeta: a must be positive");
  if (s == ComplexValue(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s = 1", s);
  if (!is_finite(s)) throw ArgumentError("hurwitz_zeta: non-finite s");

  const int terms = std::max(0, static_cast<int>(std::ceil(cfg.direct_M - a)));
  const double abs_s = std::abs(s);
  ComplexValue direct{};
  double magnitude = 0.0;  // sum of |term| weighted by the conditioning of exp(-s log x)
  for (int m = 0; m < terms; ++m) {
    const double log_x = std::log(m + a);
    const ComplexValue term = std::exp(-s * log_x);
    direct += term;
    magnitude += std::abs(term) * (1.0 + abs_s * std::abs(log_x));
  }

  const double x = terms + a;
  const double inv_x2 = 1.0 / (x * x);
  const double weight = 1.0 + (abs_s + 1.0) * std::abs(std::log(x));
  const ComplexValue x_pow = std::exp(-s * std::log(x));  // x^{-s}
  ComplexValue tail = x * x_pow / (s - 1.0) + 0.5 * x_pow;
  magnitude += weight * (std::abs(x * x_pow / (s - 1.0)) + std::abs(0.5 * x_pow));

  ComplexValue poch = s;               // (s)_{2j-1}
  ComplexValue power = x_pow / x;      // x^{-s-2j+1}
  for (int j = 1; j <= cfg.em_order; ++j) {
    const ComplexValue term = bernoulli_over_factorial(2 * j) * poch * power;
    tail += term;
    magnitude += weight * std::abs(term);
    poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    power *= inv_x2;
  }
  // poch = (s)_{2J+1}, power = x^{-s-2J-1}
  const double truncation =
      std::abs(bernoulli_over_factorial(2 * cfg.em_order + 2) * poch * power);
  const ComplexValue value = direct + tail;
  if (!is_finite(value)) throw EvaluationError("hurwitz_zeta: non-finite result");
  return {value, truncation + 4.0 * kEps * magnitude};
}

ComplexValue hurwitz_zeta(ComplexValue s, double a, const EvalConfig& cfg) {
  return hurwitz_zeta_estimate(s, a, cfg).value;
}

ComplexValue riemann_zeta(ComplexValue s, const EvalConfig& cfg) {
  return hurwitz_zeta(s, 1.0, cfg);
}

Estimate pochhammer_hurwitz(ComplexValue s, int n, double a, const EvalConfig& cfg) {
  if (n < 0) throw ArgumentError("pochhammer_hurwitz: n must be non-negative");
  if (n >= 1 && s + static_cast<double>(n) == ComplexValue(1.0, 0.0)) {
    // (s + n - 1) zeta_H(s + n, a) -> 1 at the pole
    return {pochhammer(s, n - 1), 0.0};
  }
  const ComplexValue poch = pochhammer(s, n);
  const Estimate z = hurwitz_zeta_estimate(s + static_cast<double>(n), a, cfg);
  return {poch * z.value, std::abs(poch) * z.error};
}

StieltjesTable stieltjes_constants(double a, int k_max, const EvalConfig& cfg, bool cross_check) {
  if (!(a > 0.0)) throw ArgumentError("stieltjes_constants: a must be positive");
  if (k_max < 0 || k_max > 16) throw ArgumentError("stieltjes_constants: k_max must lie in 0..16");
  cfg.validate();
  ContourSpec spec = cfg.contour;
  spec.center = 1.0;
  spec.max_order = k_max;
  double node_error = 0.0;
  const auto coeffs = contour_coefficients(
      [&](ComplexValue s) {
        const Estimate z = hurwitz_zeta_estimate(s, a, cfg);
        node_error = std::max(node_error, z.error);
        return z.value;
      },
      spec, 1, Symmetry::conjugate);

  StieltjesTable table;
  table.a = a;
  for (int k = 0; k <= k_max; ++k) {
    table.gammas.push_back(coeffs.at(k).real());
    table.errs.push_back(coeffs.error_at(k) + node_error * std::pow(spec.radius, -k));
  }
  if (!cross_check) return table;

  const StieltjesTable limit = stieltjes_constants_limit(a, k_max);
  for (int k = 0; k <= k_max; ++k) {
    const double combined = table.errs[k] + limit.errs[k];
    if (std::abs(table.gammas[k] - limit.gammas[k]) > 100.0 * combined) {
      throw ConsistencyError("stieltjes_constants: contour and limit formula disagree at k = " +
                             std::to_string(k));
    }
    table.errs[k] = std::max(table.errs[k], limit.errs[k]);
  }
  return table;
}

StieltjesTable stieltjes_constants_limit(double a, int k_max) {
  if (!(a > 0.0)) throw ArgumentError("stieltjes_constants_limit: a must be positive");
  if (k_max < 0 || k_max > 16) {
    throw ArgumentError("stieltjes_constants_limit: k_max must lie in 0..16");
  }
  constexpr int kFirstExponent = 6;
  constexpr int kLastExponent = 16;
  const int count = k_max + 1;
  std::vector<CompensatedSum> sums(static_cast<std::size_t>(count));
  std::vector<double> magnitude(static_cast<std::size_t>(count), 0.0);
  std::vector<std::vector<Sample>> samples(static_cast<std::size_t>(count));

  int next_checkpoint = 1 << kFirstExponent;
  for (int m = 0; m <= (1 << kLastExponent); ++m) {
    const double x = m + a;
    const double log_x = std::log(x);
    double power = 1.0 / x;
    for (int k = 0; k < count; ++k) {
      sums[k].add(power);
      magnitude[k] += std::abs(power);
      power *= log_x;
    }
    if (m == next_checkpoint) {
      double factorial = 1.0;
      for (int k = 0; k < count; ++k) {
        if (k > 0) factorial *= k;
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        const double counter = std::pow(log_x, k + 1) / (k + 1);
        samples[k].push_back({x, sign / factorial * (sums[k].value() - counter)});
      }
      next_checkpoint *= 2;
    }
  }

  StieltjesTable table;
  table.a = a;
  double factorial = 1.0;
  for (int k = 0; k < count; ++k) {
    if (k > 0) factorial *= k;
    const Extrapolation ex = richardson_extrapolate(samples[k], k);
    // round-off in the partial sums, amplified by the extrapolation weights
    const double roundoff = 1e3 * kEps * magnitude[k] / factorial;
    table.gammas.push_back(ex.limit);
    table.errs.push_back(ex.error + roundoff);
  }
  return table;
}

RealEstimate gamma0_integral(double a, const QuadratureSpec& spec) {
  if (!(a > 0.0) || a > 1.0) throw ArgumentError("gamma0_integral: a must lie in (0, 1]");
  const Estimate integral = frac_part_integral_1d(a, 1.0, 2.0, spec);
  return {1.0 / a - std::log(a) - integral.value.real(), integral.error};
}

}  // namespace bzeta
