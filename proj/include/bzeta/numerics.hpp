#pragma once

// Shared numerical kernels: Bernoulli numbers, Gauss-Legendre cells for
// sawtooth-kernel integrals, log-power Richardson extrapolation and
// trapezoidal Cauchy-integral coefficient extraction.

#include <functional>
#include <span>
#include <vector>

#include "bzeta/types.hpp"

namespace bzeta {

struct QuadratureSpec {
  int cell_order = 12;      // Gauss-Legendre points per (sub)cell
  int max_cells = 1 << 16;  // cap on the number of unit cells per axis
  double tail_tol = 1e-14;  // target for the asymptotic tail remainder

  void validate() const;
};

struct ContourSpec {
  ComplexValue center{0.0, 0.0};
  double radius = 0.5;
  int nodes = 256;  // power of two, >= 4 * (max_order + 1)
  int max_order = 12;

  void validate() const;
};

/// B_0 .. B_{n_max} with B_1 = -1/2, from the exact rational recurrence.
/// Requires 0 <= n_max <= 64.
std::vector<double> bernoulli_numbers(int n_max);

/// B_n / n! for even n >= 0. Exact table through n = 64, asymptotic
/// 2 (-1)^{n/2+1} zeta(n) / (2 pi)^n beyond that.
double bernoulli_over_factorial(int n);

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

/// \int_0^\infty (x - [x]) (a + c x)^{-s} dx for a, c > 0 and Re(s) > 1.
///
/// Unit cells [0, N) are integrated with Gauss-Legendre on sub-cells graded
/// towards the branch point x = -a/c; the remainder beyond N is summed in
/// closed form through the Euler-Maclaurin expansion of the periodic
/// Bernoulli kernel. N is the smallest candidate whose first omitted tail
/// term is below spec.tail_tol. The returned error is that term plus a
/// Bernstein-ellipse bound on the cell rules.
Estimate frac_part_integral_1d(double a, double c, ComplexValue s, const QuadratureSpec& spec);

/// \int_0^\infty \int_0^\infty (x-[x]) (y-[y]) (alpha + v y + w x)^{-s} dx dy,
/// Re(s) > 2. The inner x integral is frac_part_integral_1d; the outer y
/// integral uses the same cell rule plus an Euler-Maclaurin tail whose
/// derivative terms are again 1-d sawtooth integrals.
Estimate frac_part_integral_2d(double alpha, double v, double w, ComplexValue s,
                               const QuadratureSpec& spec);

struct Sample {
  double m;  // abscissa (truncation index)
  double y;  // truncated approximation at m
};

struct Extrapolation {
  double limit = 0.0;
  double error = 0.0;
};

/// Extrapolates y(m) -> limit assuming
///   y(m) = L + sum_{j>=1} sum_{i=0}^{log_power} c_ij log^i(m) / m^j,
/// with basis functions taken in order of decreasing size. Uses the last
/// u + 1 samples for u basis terms (u <= max_terms); the error is the
/// distance to the tableau entry with one fewer term.
Extrapolation richardson_extrapolate(std::span<const Sample> samples, int log_power,
                                     int max_terms = 6);

enum class Symmetry {
  none,
  /// f(conj z) = conj f(z) and the center is real; halves the evaluations.
  conjugate,
};

struct ContourCoefficients {
  int lowest_order = 0;  // -pole_order
  std::vector<ComplexValue> values;
  std::vector<double> errors;

  ComplexValue at(int k) const { return values.at(static_cast<std::size_t>(k - lowest_order)); }
  double error_at(int k) const { return errors.at(static_cast<std::size_t>(k - lowest_order)); }
};

using ComplexFunction = std::function<ComplexValue(ComplexValue)>;

/// Laurent coefficients c_{-pole_order} .. c_{max_order} of f about
/// spec.center from the trapezoidal rule on |z - center| = radius.
/// The error of each coefficient is estimated from the half-node rule plus
/// a round-off floor.
ContourCoefficients contour_coefficients(const ComplexFunction& f, const ContourSpec& spec,
                                         int pole_order, Symmetry symmetry = Symmetry::none);

/// Sum with Neumaier compensation.
class CompensatedSum {
public:
  void add(double x);
  double value() const { return sum_ + carry_; }

private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Rising factorial (s)_n = s (s+1) ... (s+n-1).
ComplexValue pochhammer(ComplexValue s, int n);

}  // namespace bzeta
