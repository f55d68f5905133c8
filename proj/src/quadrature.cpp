#include <algorithm>
#include <cmath>
#include <numbers>

#include "bzeta/errors.hpp"
#include "bzeta/numerics.hpp"

namespace bzeta {

void QuadratureSpec::validate() const {
  if (cell_order < 4) throw ArgumentError("QuadratureSpec: cell_order must be >= 4");
  if (max_cells < 1) throw ArgumentError("QuadratureSpec: max_cells must be positive");
  if (!(tail_tol > 0.0)) throw ArgumentError("QuadratureSpec: tail_tol must be positive");
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw ArgumentError("gauss_legendre: order must be positive");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      derivative = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / derivative;
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    const double weight = 2.0 / ((1.0 - z * z) * derivative * derivative);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = weight;
    rule.weights[n - 1 - i] = weight;
  }
  return rule;
}

namespace {

constexpr int kTailTerms = 8;        // Euler-Maclaurin terms B_2 .. B_16
constexpr double kEllipse = 6.0;     // Bernstein ellipse parameter for the cell bound
constexpr double kGrading = 0.5;     // sub-cell length <= kGrading * distance to branch point

double abs_pochhammer(ComplexValue s, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= std::abs(s + static_cast<double>(i));
  return r;
}

// (offset + slope x)^{-s} for real positive base.
ComplexValue real_power(double base, ComplexValue s) {
  return std::exp(-s * std::log(base));
}

// Integrates (x - floor) * f(x) over the unit cells [0, cells) with
// sub-cells graded towards the branch point `singular` < 0. `bound(dmin,
// tangent)` bounds |f| on a Bernstein ellipse whose nearest point lies at
// distance dmin from the branch point and whose angular half-width seen from
// it is atan(tangent).
template <typename F, typename Bound>
Estimate sawtooth_cells(F&& f, Bound&& bound, double singular, int cells, const GaussRule& rule) {
  const int n = static_cast<int>(rule.nodes.size());
  const double rho = kEllipse;
  const double semi_major = 0.5 * (rho + 1.0 / rho);
  const double semi_minor = 0.5 * (rho - 1.0 / rho);
  const double factor = (64.0 / 15.0) * std::pow(rho, -2.0 * n) / (rho * rho - 1.0);
  ComplexValue total{};
  double error = 0.0;
  for (int cell = 0; cell < cells; ++cell) {
    const double end = cell + 1.0;
    double x0 = cell;
    while (x0 < end) {
      const double distance = x0 - singular;
      const double length = std::min(end - x0, kGrading * distance);
      const double half = 0.5 * length;
      const double mid = x0 + half;
      ComplexValue piece{};
      for (int q = 0; q < n; ++q) {
        const double x = mid + half * rule.nodes[q];
        piece += rule.weights[q] * (x - cell) * f(x);
      }
      total += half * piece;
      const double dmin = distance - half * (semi_major - 1.0);
      const double reach = std::max(dmin, 1e-300);
      // |x - cell| <= 1 + half * (semi_major + 1) on the ellipse
      const double kernel = 1.0 + half * (semi_major + 1.0);
      error += half * factor * kernel * bound(reach, half * semi_minor / reach);
      x0 += length;
    }
  }
  return {total, error};
}

// Bound of |(offset + slope z)^{-s}| on an ellipse: |.|^{-sigma} e^{|t| theta}.
double power_bound(double slope, ComplexValue s, double dmin, double tangent) {
  return std::pow(slope * dmin, -s.real()) * std::exp(std::abs(s.imag()) * std::atan(tangent));
}

// First omitted Euler-Maclaurin term for \int_N^\infty P1(x) (a + c x)^{-s} dx.
double tail_term_1d(double a, double c, ComplexValue s, int cells) {
  const int order = 2 * kTailTerms;
  const double base = a + c * cells;
  return std::abs(bernoulli_over_factorial(order + 2)) * abs_pochhammer(s, order) *
         std::pow(c, order) * std::pow(base, -s.real() - order);
}

// \int_N^\infty (x - [x]) (a + c x)^{-s} dx = 1/2 \int_N^\infty + \int_N^\infty P1,
// the latter summed as -sum_r B_2r/(2r)! H^{(2r-2)}(N).
ComplexValue tail_value_1d(double a, double c, ComplexValue s, int cells) {
  const double base = a + c * cells;
  ComplexValue tail = 0.5 * real_power(base, s - 1.0) / (c * (s - 1.0));
  ComplexValue poch = 1.0;  // (s)_m
  double scale = 1.0;       // c^m
  for (int r = 1; r <= kTailTerms; ++r) {
    const int m = 2 * r - 2;
    if (m > 0) {
      poch *= (s + static_cast<double>(m - 2)) * (s + static_cast<double>(m - 1));
      scale *= c * c;
    }
    tail -= bernoulli_over_factorial(2 * r) * scale * poch *
            real_power(base, s + static_cast<double>(m));
  }
  return tail;
}

int choose_cells(const std::function<double(int)>& tail_error, const QuadratureSpec& spec,
                 double* achieved) {
  int cells = 0;
  for (;;) {
    const double err = tail_error(cells);
    if (err <= spec.tail_tol) {
      *achieved = err;
      return cells;
    }
    const int next = cells == 0 ? 4 : 2 * cells;
    if (cells >= spec.max_cells) {
      *achieved = err;
      return -1;
    }
    cells = std::min(next, spec.max_cells);
  }
}

Estimate sawtooth_1d(double a, double c, ComplexValue s, const QuadratureSpec& spec,
                     const GaussRule& rule) {
  double tail_err = 0.0;
  int cells = choose_cells([&](int n) { return tail_term_1d(a, c, s, n); }, spec, &tail_err);
  const bool exhausted = cells < 0;
  if (exhausted) cells = spec.max_cells;
  const Estimate body = sawtooth_cells(
      [&](double x) { return real_power(a + c * x, s); },
      [&](double dmin, double tangent) { return power_bound(c, s, dmin, tangent); }, -a / c,
      cells, rule);
  Estimate result{body.value + tail_value_1d(a, c, s, cells), body.error + tail_err};
  if (exhausted) {
    throw AccuracyError("frac_part_integral_1d: cell budget exhausted", result.value,
                        result.error);
  }
  return result;
}

}  // namespace

Estimate frac_part_integral_1d(double a, double c, ComplexValue s, const QuadratureSpec& spec) {
  spec.validate();
  if (!(a > 0.0) || !(c > 0.0)) throw ArgumentError("frac_part_integral_1d: a, c must be positive");
  if (!(s.real() > 1.0)) throw DomainError("frac_part_integral_1d: requires Re(s) > 1");
  return sawtooth_1d(a, c, s, spec, gauss_legendre(spec.cell_order));
}

Estimate frac_part_integral_2d(double alpha, double v, double w, ComplexValue s,
                               const QuadratureSpec& spec) {
  spec.validate();
  if (!(alpha > 0.0) || !(v > 0.0) || !(w > 0.0)) {
    throw ArgumentError("frac_part_integral_2d: alpha, v, w must be positive");
  }
  if (!(s.real() > 2.0)) throw DomainError("frac_part_integral_2d: requires Re(s) > 2");
  const GaussRule rule = gauss_legendre(spec.cell_order);
  const double sigma = s.real();

  // G(y) = \int_0^\infty {x} (alpha + v y + w x)^{-s} dx, analytic in y with a
  // branch point at y = -alpha / v; G^{(m)}(y) = (-v)^m (s)_m G_{s+m}(y).
  const auto inner = [&](double offset, ComplexValue exponent) {
    return sawtooth_1d(offset, w, exponent, spec, rule);
  };
  // |G_{s}(y)| <= (alpha + v y)^{1-sigma} / (w (sigma - 1))
  const auto tail_error = [&](int cells) {
    const int order = 2 * kTailTerms;
    const double base = alpha + v * cells;
    return std::abs(bernoulli_over_factorial(order + 2)) * abs_pochhammer(s, order) *
           std::pow(v, order) * std::pow(base, 1.0 - sigma - order) /
           (w * (sigma + order - 1.0));
  };
  double tail_err = 0.0;
  int cells = choose_cells(tail_error, spec, &tail_err);
  const bool exhausted = cells < 0;
  if (exhausted) cells = spec.max_cells;

  double inner_error = 0.0;
  const Estimate body = sawtooth_cells(
      [&](double y) {
        const Estimate g = inner(alpha + v * y, s);
        inner_error = std::max(inner_error, g.error);
        return g.value;
      },
      [&](double dmin, double tangent) {
        return std::pow(v * dmin, 1.0 - sigma) / (w * (sigma - 1.0)) *
               std::exp(std::abs(s.imag()) * std::atan(tangent));
      },
      -alpha / v, cells, rule);

  const double base = alpha + v * cells;
  const Estimate integral_tail = inner(base, s - 1.0);
  ComplexValue tail = 0.5 * integral_tail.value / (v * (s - 1.0));
  double tail_eval_error = 0.5 * integral_tail.error / (v * std::abs(s - 1.0));
  ComplexValue poch = 1.0;
  double scale = 1.0;
  for (int r = 1; r <= kTailTerms; ++r) {
    const int m = 2 * r - 2;
    if (m > 0) {
      poch *= (s + static_cast<double>(m - 2)) * (s + static_cast<double>(m - 1));
      scale *= v * v;
    }
    const Estimate g = inner(base, s + static_cast<double>(m));
    const ComplexValue coeff = bernoulli_over_factorial(2 * r) * scale * poch;
    tail -= coeff * g.value;
    tail_eval_error += std::abs(coeff) * g.error;
  }
  // The inner error is uniform in y; the sawtooth weight integrates to cells / 2.
  const double error = body.error + tail_err + tail_eval_error + 0.5 * cells * inner_error;
  Estimate result{body.value + tail, error};
  if (exhausted) {
    throw AccuracyError("frac_part_integral_2d: cell budget exhausted", result.value,
                        result.error);
  }
  return result;
}

}  // namespace bzeta
