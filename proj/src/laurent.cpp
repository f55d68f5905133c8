#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bzeta/errors.hpp"
#include "bzeta/hurwitz.hpp"
#include "bzeta/laurent.hpp"

namespace bzeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxOrder = 12;
constexpr double kLargestArgument = 1e15;

LaurentExpansion laurent_about(double center, double exact_residue, const BarnesParams& p,
                               int k_max, const EvalConfig& cfg) {
  p.validate();
  cfg.validate();
  if (k_max < 0 || k_max > kMaxOrder) throw ArgumentError("laurent: k_max must lie in 0..12");
  ContourSpec spec = cfg.contour;
  spec.center = center;
  spec.max_order = k_max;
  if (!(spec.radius < 1.0)) throw DomainError("laurent: contour radius must be below 1");
  double node_error = 0.0;
  const ContourCoefficients c = contour_coefficients(
      [&](ComplexValue s) {
        const Estimate z = zeta2_estimate(s, p, cfg);
        node_error = std::max(node_error, z.error);
        return z.value;
      },
      spec, 1, Symmetry::conjugate);

  LaurentExpansion out;
  out.center = center;
  out.method = LaurentMethod::contour;
  out.gamma_minus1 = c.at(-1).real();
  out.gamma_minus1_exact = exact_residue;
  out.gamma_minus1_err = c.error_at(-1) + node_error * spec.radius +
                         std::abs(out.gamma_minus1 - exact_residue);
  for (int k = 0; k <= k_max; ++k) {
    out.gammas.push_back(c.at(k).real());
    out.errs.push_back(c.error_at(k) + node_error * std::pow(spec.radius, -k));
  }
  return out;
}

}  // namespace

LaurentExpansion laurent_at_2(const BarnesParams& p, int k_max, const EvalConfig& cfg) {
  return laurent_about(2.0, 1.0 / (p.v * p.w), p, k_max, cfg);
}

LaurentExpansion laurent_at_1(const BarnesParams& p, int k_max, const EvalConfig& cfg) {
  return laurent_about(1.0, (p.v + p.w - 2.0 * p.alpha) / (2.0 * p.v * p.w), p, k_max, cfg);
}

RealEstimate gamma0_at_2_integral(const BarnesParams& p, const EvalConfig& cfg) {
  p.validate();
  cfg.validate();
  const double alpha = p.alpha, v = p.v, w = p.w;
  const Estimate hv = hurwitz_zeta_estimate(2.0, alpha / v, cfg);
  const Estimate hw = hurwitz_zeta_estimate(2.0, alpha / w, cfg);
  const Estimate jx = frac_part_integral_1d(alpha, w, 2.0, cfg.quad);
  const Estimate jy = frac_part_integral_1d(alpha, v, 2.0, cfg.quad);
  const Estimate jj = frac_part_integral_2d(alpha, v, w, 4.0, cfg.quad);
  const double value = -1.0 / (alpha * alpha) - (1.0 + std::log(alpha)) / (v * w) +
                       hv.value.real() / (v * v) + hw.value.real() / (w * w) -
                       (w / v) * jx.value.real() - (v / w) * jy.value.real() +
                       6.0 * v * w * jj.value.real();
  const double error = hv.error / (v * v) + hw.error / (w * w) + (w / v) * jx.error +
                       (v / w) * jy.error + 6.0 * v * w * jj.error;
  return {value, error};
}

double limit_counterterm(const BarnesParams& p, int k, double M) {
  p.validate();
  if (k < 0 || k > kMaxOrder) throw ArgumentError("limit_counterterm: k must lie in 0..12");
  const double l0 = std::log(p.alpha), lv = std::log(p.alpha + p.v * M),
               lw = std::log(p.alpha + p.w * M), lvw = std::log(p.alpha + (p.v + p.w) * M);
  // \int_u^\infty log^k t / t^2 dt = sum_j k!/(k-j)! log^{k-j}(u) / u, then
  // \int log^i(u)/u du = log^{i+1}(u)/(i+1).
  double total = 0.0;
  double coeff = 1.0 / (k + 1);  // k!/(k+1-l)!
  for (int l = 0; l <= k; ++l) {
    const int power = k + 1 - l;
    total += coeff * (std::pow(lv, power) + std::pow(lw, power) - std::pow(l0, power) -
                      std::pow(lvw, power));
    coeff *= power;
  }
  return total / (p.v * p.w);
}

double limit_constant(const BarnesParams& p, int k) {
  p.validate();
  if (k < 0 || k > kMaxOrder) throw ArgumentError("limit_constant: k must lie in 0..12");
  // (s-2)^k coefficient of alpha^{2-s}/(vw(s-1)(s-2)) beyond its pole:
  // (-1)^{k+1} sum_{i<=k+1} log^i(alpha)/i! / (vw)
  const double l = std::log(p.alpha);
  double total = 0.0, term = 1.0;
  for (int i = 0; i <= k + 1; ++i) {
    if (i > 0) term *= l / i;
    total += term;
  }
  return (k % 2 == 0 ? -1.0 : 1.0) * total / (p.v * p.w);
}

std::vector<int> default_limit_M_list() {
  std::vector<int> out;
  for (int e = 6; e <= 12; ++e) out.push_back(1 << e);
  return out;
}

namespace {

struct LimitData {
  std::vector<int> M;
  std::vector<std::vector<double>> values;  // [k][index of M]
  std::vector<double> magnitude;            // sum |log^k u / u^2| at the largest M
};

LimitData limit_data(const BarnesParams& p, int k_max, std::vector<int> M_list) {
  p.validate();
  if (k_max < 0 || k_max > kMaxOrder) throw ArgumentError("limit formula: k must lie in 0..12");
  if (M_list.empty()) throw ArgumentError("limit formula: M_list is empty");
  std::sort(M_list.begin(), M_list.end());
  M_list.erase(std::unique(M_list.begin(), M_list.end()), M_list.end());
  if (M_list.front() < 16) throw ArgumentError("limit formula: every M must be >= 16");
  // log-power cancellation degrades beyond this size of argument
  while (!M_list.empty() && p.alpha + (p.v + p.w) * M_list.back() > kLargestArgument) {
    M_list.pop_back();
  }
  if (M_list.empty()) throw ArgumentError("limit formula: every M exceeds the argument cap");

  const int count = k_max + 1;
  std::vector<CompensatedSum> sums(static_cast<std::size_t>(count));
  std::vector<double> magnitude(static_cast<std::size_t>(count), 0.0);
  LimitData data;
  data.M = M_list;
  data.values.assign(static_cast<std::size_t>(count), {});
  const auto add = [&](int m, int n) {
    const double u = p.alpha + m * p.v + n * p.w;
    const double lu = std::log(u);
    double term = 1.0 / (u * u);
    for (int k = 0; k < count; ++k) {
      sums[k].add(term);
      magnitude[k] += std::abs(term);
      term *= lu;
    }
  };
  std::vector<double> constants;
  for (int k = 0; k < count; ++k) constants.push_back(limit_constant(p, k));
  std::size_t next = 0;
  for (int r = 0; r <= M_list.back(); ++r) {
    // shell max(m, n) = r
    for (int n = 0; n <= r; ++n) add(r, n);
    for (int m = 0; m < r; ++m) add(m, r);
    if (r != M_list[next]) continue;
    double factorial = 1.0;
    for (int k = 0; k < count; ++k) {
      if (k > 0) factorial *= k;
      const double sign = k % 2 == 0 ? 1.0 : -1.0;
      data.values[k].push_back(sign / factorial * (sums[k].value() - limit_counterterm(p, k, r)) +
                               constants[k]);
    }
    ++next;
  }
  double factorial = 1.0;
  for (int k = 0; k < count; ++k) {
    if (k > 0) factorial *= k;
    data.magnitude.push_back(magnitude[k] / factorial);
  }
  return data;
}

}  // namespace

std::vector<std::vector<double>> limit_sequence(const BarnesParams& p, int k_max,
                                                const std::vector<int>& M_list) {
  return limit_data(p, k_max, M_list).values;
}

std::vector<RealEstimate> gammak_at_2_limit_all(const BarnesParams& p, int k_max,
                                                const std::vector<int>& M_list, bool accelerate) {
  const LimitData data = limit_data(p, k_max, M_list);
  const std::size_t n = data.M.size();
  if (accelerate && n < 3) {
    throw ArgumentError("limit formula: acceleration needs at least three admissible M");
  }
  std::vector<RealEstimate> out;
  for (int k = 0; k <= k_max; ++k) {
    const std::vector<double>& y = data.values[k];
    if (n >= 3) {
      const double first = std::abs(y[1] - y[0]);
      const double last = std::abs(y[n - 1] - y[n - 2]);
      if (last > 2.0 * first) {
        throw ConsistencyError("limit formula: sequence for k = " + std::to_string(k) +
                               " is not settling across M_list");
      }
    }
    const double roundoff = 1e2 * kEps * data.magnitude[k];
    if (!accelerate) {
      // a remainder c log^k(M)/M left after the last step is about the last
      // movement scaled by M_{n-1}/(M_n - M_{n-1}); doubled for the log factor
      double remaining = std::abs(y[0]);
      if (n >= 2) {
        const double ratio = data.M[n - 2] / static_cast<double>(data.M[n - 1] - data.M[n - 2]);
        remaining = 2.0 * ratio * std::abs(y[n - 1] - y[n - 2]);
      }
      out.push_back({y[n - 1], remaining + roundoff});
      continue;
    }
    std::vector<Sample> samples;
    for (std::size_t i = 0; i < n; ++i) samples.push_back({static_cast<double>(data.M[i]), y[i]});
    // remainders are edge sums of log^k(u)/u^2, i.e. O(log^k M / M)
    const Extrapolation ex = richardson_extrapolate(samples, k);
    out.push_back({ex.limit, ex.error + roundoff});
  }
  return out;
}

RealEstimate gammak_at_2_limit(const BarnesParams& p, int k, const std::vector<int>& M_list,
                               bool accelerate) {
  return gammak_at_2_limit_all(p, k, M_list, accelerate).at(static_cast<std::size_t>(k));
}

}  // namespace bzeta
