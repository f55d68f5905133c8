#pragma once

#include <vector>

#include "bzeta/config.hpp"
#include "bzeta/types.hpp"

namespace bzeta {

/// zeta_H(s, a) = sum_{m>=0} (m+a)^{-s}, continued to s != 1 by
/// Euler-Maclaurin. The direct part runs until m + a >= cfg.direct_M; the
/// error is the first omitted Bernoulli term plus a round-off floor.
Estimate hurwitz_zeta_estimate(ComplexValue s, double a, const EvalConfig& cfg);
ComplexValue hurwitz_zeta(ComplexValue s, double a, const EvalConfig& cfg);

ComplexValue riemann_zeta(ComplexValue s, const EvalConfig& cfg);

/// (s)_n zeta_H(s + n, a). Finite where s + n = 1 and (s)_n vanishes there.
Estimate pochhammer_hurwitz(ComplexValue s, int n, double a, const EvalConfig& cfg);

/// Generalized Stieltjes constants, normalized as Laurent coefficients:
/// zeta_H(s, a) = 1/(s-1) + sum_k gammas[k] (s-1)^k.
struct StieltjesTable {
  double a = 1.0;
  std::vector<double> gammas;
  std::vector<double> errs;
};

/// Contour extraction about s = 1. With cross_check, the finite-M limit
/// formula is run as well and a ConsistencyError raised on disagreement
/// beyond 100x the combined error; the table then carries the larger error.
StieltjesTable stieltjes_constants(double a, int k_max, const EvalConfig& cfg,
                                   bool cross_check = false);

/// gamma_k(a) = (-1)^k/k! lim_M { sum_{m<=M} log^k(m+a)/(m+a) - log^{k+1}(M+a)/(k+1) },
/// Richardson-accelerated over M = 2^6 .. 2^16.
StieltjesTable stieltjes_constants_limit(double a, int k_max);

/// gamma_0(a) = 1/a - log a - \int_0^\infty (x-[x]) / (x+a)^2 dx, for 0 < a <= 1.
RealEstimate gamma0_integral(double a, const QuadratureSpec& spec);

}  // namespace bzeta
