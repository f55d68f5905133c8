#pragma once

#include <functional>
#include <vector>

#include "bzeta/config.hpp"
#include "bzeta/types.hpp"

namespace bzeta {

struct BarnesParams {
  double alpha = 1.0;
  double v = 1.0;
  double w = 1.0;

  void validate() const;
};

/// Square truncation sum_{m,n=0}^{M} (alpha + m v + n w)^{-s}, Re(s) > 2.
/// The error is a rigorous bound on the omitted terms.
Estimate zeta2_direct(ComplexValue s, const BarnesParams& p, int M);

/// zeta_2(s, alpha; v, w) for s not in {1, 2}, Re(s) > -2 em_order.
/// Euler-Maclaurin over the outer index m of w^{-s} zeta_H(s, (alpha + m v)/w).
Estimate zeta2_estimate(ComplexValue s, const BarnesParams& p, const EvalConfig& cfg);
ComplexValue zeta2(ComplexValue s, const BarnesParams& p, const EvalConfig& cfg);

/// Seven-term representation with sawtooth integrals, Re(s) > 1, s != 2.
Estimate zeta2_integral_rep(ComplexValue s, const BarnesParams& p, const EvalConfig& cfg);

/// zeta_2^{(k)}(0, alpha; v, w) for k = 0 .. k_max, by contour about 0.
std::vector<Estimate> zeta2_s_derivatives_at_0_estimate(const BarnesParams& p, int k_max,
                                                        const EvalConfig& cfg);
std::vector<ComplexValue> zeta2_s_derivatives_at_0(const BarnesParams& p, int k_max,
                                                   const EvalConfig& cfg);

/// log Gamma_2(alpha; v, w) = zeta_2'(0, alpha; v, w).
RealEstimate log_gamma2_estimate(const BarnesParams& p, const EvalConfig& cfg);
double log_gamma2(const BarnesParams& p, const EvalConfig& cfg);

/// k-th alpha-derivative of f by central differences at steps h and h/2,
/// combined by one Richardson step. The truncation error is estimated
/// against the same combination at h/2 and h/4; f's own reported error
/// enters as round-off. k <= 4.
RealEstimate alpha_derivative(const std::function<RealEstimate(double)>& f, double alpha, int k,
                              double h);

/// fd_step, after checking 0 < fd_step < alpha/4 (ArgumentError otherwise).
double effective_fd_step(double alpha, const EvalConfig& cfg);

/// psi_2^{(k)}(alpha; v, w) = d^k/dalpha^k log Gamma_2(alpha; v, w), k <= 4.
RealEstimate polygamma2_estimate(int k, const BarnesParams& p, const EvalConfig& cfg);
double polygamma2(int k, const BarnesParams& p, const EvalConfig& cfg);

}  // namespace bzeta
