#pragma once

#include <vector>

#include "bzeta/barnes.hpp"

namespace bzeta {

enum class LaurentMethod { contour, limit_formula, integral_rep };

/// zeta_2(s) = gamma_minus1/(s - center) + sum_k gammas[k] (s - center)^k.
struct LaurentExpansion {
  double center = 2.0;
  double gamma_minus1 = 0.0;
  double gamma_minus1_err = 0.0;
  double gamma_minus1_exact = 0.0;  // 1/(vw) at 2, (v+w-2 alpha)/(2vw) at 1
  std::vector<double> gammas;
  std::vector<double> errs;
  LaurentMethod method = LaurentMethod::contour;
};

/// Contour extraction about s = 2 (radius from cfg.contour, must be < 1).
LaurentExpansion laurent_at_2(const BarnesParams& p, int k_max, const EvalConfig& cfg);
/// Contour extraction about s = 1.
LaurentExpansion laurent_at_1(const BarnesParams& p, int k_max, const EvalConfig& cfg);

/// gamma_0(2) from the sawtooth-integral representation.
RealEstimate gamma0_at_2_integral(const BarnesParams& p, const EvalConfig& cfg);

/// \int_0^M \int_0^M log^k(u)/u^2 dx dy, u = alpha + v x + w y.
double limit_counterterm(const BarnesParams& p, int k, double M);

/// Constant that the square sum minus the square integral misses:
/// gamma_k(2) = lim_M (-1)^k/k! [ sum_{m,n<=M} log^k(u)/u^2 - counterterm ] + limit_constant.
/// It is the regular (s-2)^k coefficient of alpha^{2-s}/(vw(s-1)(s-2)), sign-flipped.
double limit_constant(const BarnesParams& p, int k);

/// The truncated expression above at each M of M_list (ascending), for
/// k = 0..k_max, in one pass over the lattice.
std::vector<std::vector<double>> limit_sequence(const BarnesParams& p, int k_max,
                                                const std::vector<int>& M_list);

/// 2^6 .. 2^12.
std::vector<int> default_limit_M_list();

/// gamma_k(2) by the finite-M limit formula: raw value at the largest M, or
/// Richardson-extrapolated over M_list when accelerate is set.
std::vector<RealEstimate> gammak_at_2_limit_all(const BarnesParams& p, int k_max,
                                                const std::vector<int>& M_list, bool accelerate);
RealEstimate gammak_at_2_limit(const BarnesParams& p, int k, const std::vector<int>& M_list,
                               bool accelerate);

}  // namespace bzeta
