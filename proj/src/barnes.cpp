#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bzeta/barnes.hpp"
#include "bzeta/errors.hpp"
#include "bzeta/hurwitz.hpp"

namespace bzeta {

void BarnesParams::validate() const {
  const auto ok = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!ok(alpha) || !ok(v) || !ok(w)) {
    throw ArgumentError("BarnesParams: alpha, v, w must be positive and finite");
  }
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct ComplexSum {
  CompensatedSum re, im;
  void add(ComplexValue z) {
    re.add(z.real());
    im.add(z.imag());
  }
  ComplexValue value() const { return {re.value(), im.value()}; }
};

ComplexValue real_power(double base, ComplexValue s) { return std::exp(-s * std::log(base)); }

void check_poles(ComplexValue s, const char* who) {
  if (s == ComplexValue(1.0, 0.0) || s == ComplexValue(2.0, 0.0)) {
    throw PoleError(std::string(who) + ": pole at s = " + (s.real() == 1.0 ? "1" : "2"), s);
  }
}

}  // namespace

Estimate zeta2_direct(ComplexValue s, const BarnesParams& p, int M) {
  p.validate();
  if (M < 0) throw ArgumentError("zeta2_direct: M must be non-negative");
  if (!(s.real() > 2.0)) throw DomainError("zeta2_direct: requires Re(s) > 2");
  const double sigma = s.real();
  ComplexSum total;
  double magnitude = 0.0;
  for (int m = 0; m <= M; ++m) {
    ComplexSum row;
    for (int n = 0; n <= M; ++n) {
      const double x = p.alpha + m * p.v + n * p.w;
      const double log_x = std::log(x);
      const ComplexValue term = std::exp(-s * log_x);
      row.add(term);
      magnitude += std::abs(term) * (1.0 + std::abs(s) * std::abs(log_x));
    }
    total.add(row.value());
  }
  // Terms with m > M (or n > M): sum_{m>M} [(alpha+mv)^{-sigma} + (alpha+mv)^{1-sigma}/(w(sigma-1))]
  // is at most the integral from M of the same, and symmetrically in n.
  const auto strip = [&](double step, double other) {
    const double base = p.alpha + M * step;
    return std::pow(base, 1.0 - sigma) / (step * (sigma - 1.0)) +
           std::pow(base, 2.0 - sigma) / (step * other * (sigma - 1.0) * (sigma - 2.0));
  };
  const double tail = strip(p.v, p.w) + strip(p.w, p.v);
  return {total.value(), tail + 4.0 * kEps * magnitude};
}

Estimate zeta2_estimate(ComplexValue s, const BarnesParams& p, const EvalConfig& cfg) {
  p.validate();
  cfg.validate();
  if (!is_finite(s)) throw ArgumentError("zeta2: non-finite s");
  check_poles(s, "zeta2");
  if (!(s.real() > -2.0 * cfg.em_order)) {
    throw DomainError("zeta2: Re(s) must exceed -2 em_order = " +
                      std::to_string(-2 * cfg.em_order));
  }
  // Symmetric in (v, w); summing over the smaller period keeps the Hurwitz
  // arguments (alpha + m v)/w below alpha/w + M and limits cancellation.
  const BarnesParams q = p.v <= p.w ? p : BarnesParams{p.alpha, p.w, p.v};
  const int M = cfg.direct_M;
  const double ratio = q.v / q.w;

  ComplexSum rows;
  double error = 0.0;
  double magnitude = 0.0;
  for (int m = 0; m < M; ++m) {
    const Estimate z = hurwitz_zeta_estimate(s, (q.alpha + m * q.v) / q.w, cfg);
    rows.add(z.value);
    error += z.error;
    magnitude += std::abs(z.value);
  }

  // Euler-Maclaurin for sum_{m>=M} f(m), f(m) = zeta_H(s, a(m)), a(m) = (alpha + m v)/w:
  // f^{(n)}(m) = (-v/w)^n (s)_n zeta_H(s+n, a(m)); the integral uses zeta_H(s-1, .)/(s-1).
  const double a_M = (q.alpha + M * q.v) / q.w;
  const Estimate integral = hurwitz_zeta_estimate(s - 1.0, a_M, cfg);
  const ComplexValue integral_scale = 1.0 / (ratio * (s - 1.0));
  const Estimate endpoint = hurwitz_zeta_estimate(s, a_M, cfg);
  ComplexValue bracket = integral_scale * integral.value + 0.5 * endpoint.value;
  error += std::abs(integral_scale) * integral.error + 0.5 * endpoint.error;
  magnitude += std::abs(integral_scale * integral.value) + std::abs(0.5 * endpoint.value);

  double ratio_power = ratio;  // (v/w)^{2j-1}
  for (int j = 1; j <= cfg.em_order; ++j) {
    const Estimate ph = pochhammer_hurwitz(s, 2 * j - 1, a_M, cfg);
    const double coeff = bernoulli_over_factorial(2 * j) * ratio_power;
    bracket += coeff * ph.value;
    error += std::abs(coeff) * ph.error;
    magnitude += std::abs(coeff * ph.value);
    ratio_power *= ratio * ratio;
  }
  const int J = cfg.em_order;
  const double omitted = std::abs(bernoulli_over_factorial(2 * J + 2) * ratio_power *
                                  pochhammer_hurwitz(s, 2 * J + 1, a_M, cfg).value);

  const ComplexValue scale = real_power(q.w, s);
  const double abs_scale = std::abs(scale);
  const ComplexValue value = scale * (rows.value() + bracket);
  if (!is_finite(value)) throw EvaluationError("zeta2: non-finite result");
  return {value, abs_scale * (error + omitted + 4.0 * kEps * magnitude)};
}

ComplexValue zeta2(ComplexValue s, const BarnesParams& p, const EvalConfig& cfg) {
  return zeta2_estimate(s, p, cfg).value;
}

Estimate zeta2_integral_rep(ComplexValue s, const BarnesParams& p, const EvalConfig& cfg) {
  p.validate();
  cfg.validate();
  if (!(s.real() > 1.0)) throw DomainError("zeta2_integral_rep: requires Re(s) > 1");
  check_poles(s, "zeta2_integral_rep");
  const double alpha = p.alpha, v = p.v, w = p.w;

  const Estimate hv = hurwitz_zeta_estimate(s, alpha / v, cfg);
  const Estimate hw = hurwitz_zeta_estimate(s, alpha / w, cfg);
  const Estimate jx = frac_part_integral_1d(alpha, w, s, cfg.quad);
  const Estimate jy = frac_part_integral_1d(alpha, v, s, cfg.quad);
  const Estimate jj = frac_part_integral_2d(alpha, v, w, s + 2.0, cfg.quad);

  const ComplexValue sv = real_power(v, s), sw = real_power(w, s);
  const ComplexValue rational = real_power(alpha, s - 2.0) / (v * w * (s - 1.0) * (s - 2.0));
  const ComplexValue double_scale = v * w * s * (s + 1.0);
  const ComplexValue value = -real_power(alpha, s) + sv * hv.value + sw * hw.value + rational -
                             (w / v) * jx.value - (v / w) * jy.value + double_scale * jj.value;
  const double error = std::abs(sv) * hv.error + std::abs(sw) * hw.error + (w / v) * jx.error +
                       (v / w) * jy.error + std::abs(double_scale) * jj.error +
                       4.0 * kEps * (std::abs(rational) + std::abs(sv * hv.value) +
                                     std::abs(sw * hw.value));
  return {value, error};
}

std::vector<Estimate> zeta2_s_derivatives_at_0_estimate(const BarnesParams& p, int k_max,
                                                        const EvalConfig& cfg) {
  p.validate();
  cfg.validate();
  if (k_max < 0) throw ArgumentError("zeta2_s_derivatives_at_0: k_max must be non-negative");
  if (cfg.em_order < 2) throw DomainError("zeta2_s_derivatives_at_0: requires em_order >= 2");
  ContourSpec spec = cfg.contour;
  spec.center = 0.0;
  spec.max_order = k_max;
  if (!(spec.radius < 1.0)) {
    throw DomainError("zeta2_s_derivatives_at_0: contour radius must be below 1 (pole at s = 1)");
  }
  double node_error = 0.0;
  const ContourCoefficients coeffs = contour_coefficients(
      [&](ComplexValue s) {
        const Estimate z = zeta2_estimate(s, p, cfg);
        node_error = std::max(node_error, z.error);
        return z.value;
      },
      spec, 0, Symmetry::conjugate);

  std::vector<Estimate> out;
  double factorial = 1.0;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) factorial *= k;
    const double err = coeffs.error_at(k) + node_error * std::pow(spec.radius, -k);
    out.push_back({factorial * coeffs.at(k), factorial * err});
  }
  return out;
}

std::vector<ComplexValue> zeta2_s_derivatives_at_0(const BarnesParams& p, int k_max,
                                                   const EvalConfig& cfg) {
  std::vector<ComplexValue> out;
  for (const Estimate& e : zeta2_s_derivatives_at_0_estimate(p, k_max, cfg)) out.push_back(e.value);
  return out;
}

RealEstimate log_gamma2_estimate(const BarnesParams& p, const EvalConfig& cfg) {
  const Estimate d = zeta2_s_derivatives_at_0_estimate(p, 1, cfg).at(1);
  return {d.value.real(), d.error};
}

double log_gamma2(const BarnesParams& p, const EvalConfig& cfg) {
  return log_gamma2_estimate(p, cfg).value;
}

RealEstimate alpha_derivative(const std::function<RealEstimate(double)>& f, double alpha, int k,
                              double h) {
  if (k < 0 || k > 4) throw ArgumentError("alpha_derivative: order must lie in 0..4");
  if (!(h > 0.0)) throw ArgumentError("alpha_derivative: step must be positive");
  if (k == 0) return f(alpha);
  // central stencils, offsets -2..2, all second order
  static constexpr double kStencil[5][5] = {
      {0, 0, 1, 0, 0},
      {0, -0.5, 0, 0.5, 0},
      {0, 1, -2, 1, 0},
      {-0.5, 1, 0, -1, 0.5},
      {1, -4, 6, -4, 1},
  };
  const auto difference = [&](double step) {
    double value = 0.0, noise = 0.0;
    for (int i = 0; i < 5; ++i) {
      const double c = kStencil[k][i];
      if (c == 0.0) continue;
      const RealEstimate y = f(alpha + (i - 2) * step);
      value += c * y.value;
      noise += std::abs(c) * y.error;
    }
    const double scale = std::pow(step, -k);
    return RealEstimate{value * scale, noise * scale};
  };
  // value from steps h and h/2; its error from a second refinement with h/4
  const RealEstimate d1 = difference(h);
  const RealEstimate d2 = difference(0.5 * h);
  const RealEstimate d4 = difference(0.25 * h);
  const double refined = (4.0 * d2.value - d1.value) / 3.0;
  const double next = (4.0 * d4.value - d2.value) / 3.0;
  const double noise = (4.0 * d2.error + d1.error) / 3.0;
  // |refined - next| is about 15/16 of the error in refined; doubled for safety
  return {refined, 2.0 * std::abs(refined - next) + noise};
}

double effective_fd_step(double alpha, const EvalConfig& cfg) {
  if (!(cfg.fd_step > 0.0) || !(cfg.fd_step < 0.25 * alpha)) {
    throw ArgumentError("fd_step must lie in (0, alpha/4)");
  }
  return cfg.fd_step;
}

RealEstimate polygamma2_estimate(int k, const BarnesParams& p, const EvalConfig& cfg) {
  p.validate();
  if (k < 0 || k > 4) throw ArgumentError("polygamma2: k must lie in 0..4");
  if (k == 0) return log_gamma2_estimate(p, cfg);
  const double h = effective_fd_step(p.alpha, cfg);
  return alpha_derivative(
      [&](double a) { return log_gamma2_estimate({a, p.v, p.w}, cfg); }, p.alpha, k, h);
}

double polygamma2(int k, const BarnesParams& p, const EvalConfig& cfg) {
  return polygamma2_estimate(k, p, cfg).value;
}

}  // namespace bzeta
