#pragma once

// Test-only reference computations. Each avoids the library's code path it
// is used to check (no Euler-Maclaurin tails, no graded cells, no contours).

#include <cmath>
#include <complex>
#include <vector>

#include "bzeta/numerics.hpp"

namespace oracle {

// Euler's constant from H_n - log n with the classical asymptotic correction.
inline double euler_gamma() {
  const int n = 20000;
  double h = 0.0;
  for (int m = n; m >= 1; --m) h += 1.0 / m;
  const double x = n;
  return h - std::log(x) - 1.0 / (2 * x) + 1.0 / (12 * x * x) - 1.0 / (120 * std::pow(x, 4));
}

// \int_0^\infty (x-[x]) (2+3x)^{-2} dx from exact per-cell antiderivatives.
inline double sawtooth_cells_2_3(int cells) {
  bzeta::CompensatedSum sum;
  for (int i = 0; i < cells; ++i) {
    const double u = 2.0 + 3.0 * i;
    sum.add((std::log1p(3.0 / u) - 3.0 / (u + 3.0)) / 9.0);
  }
  const double u = 2.0 + 3.0 * cells;
  sum.add(0.5 / (3.0 * u) - 1.0 / (12.0 * u * u));
  return sum.value();
}

// Fixed 24-point Gauss on uniform sub-cells, mean-value tail only.
inline std::complex<double> sawtooth_gauss_brute(double a, double c, std::complex<double> s,
                                                 int cells) {
  const bzeta::GaussRule rule = bzeta::gauss_legendre(24);
  std::complex<double> total{};
  for (int i = 0; i < cells; ++i) {
    const int pieces = i < 4 ? 32 : 1;
    for (int p = 0; p < pieces; ++p) {
      const double lo = i + static_cast<double>(p) / pieces;
      const double half = 0.5 / pieces;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double x = lo + half * (1.0 + rule.nodes[q]);
        total += half * rule.weights[q] * (x - i) * std::pow(a + c * x, -s);
      }
    }
  }
  const double u = a + c * cells;
  total += 0.5 * std::pow(u, 1.0 - s) / (c * (s - 1.0)) - std::pow(u, -s) / 12.0;
  return total;
}

// Tensor Gauss over cells with i + j < band, no tail.
inline double sawtooth_2d_brute(double alpha, double v, double w, double s, int band) {
  const bzeta::GaussRule rule = bzeta::gauss_legendre(16);
  bzeta::CompensatedSum sum;
  for (int i = 0; i < band; ++i) {
    for (int j = 0; i + j < band; ++j) {
      const int pieces = i + j < 3 ? 8 : 1;
      double cell = 0.0;
      for (int pi = 0; pi < pieces; ++pi) {
        for (int pj = 0; pj < pieces; ++pj) {
          const double h = 0.5 / pieces;
          for (std::size_t a = 0; a < rule.nodes.size(); ++a) {
            const double x = i + (pi + 0.5) / pieces + h * rule.nodes[a];
            for (std::size_t b = 0; b < rule.nodes.size(); ++b) {
              const double y = j + (pj + 0.5) / pieces + h * rule.nodes[b];
              cell += h * h * rule.weights[a] * rule.weights[b] * (x - i) * (y - j) *
                      std::pow(alpha + v * y + w * x, -s);
            }
          }
        }
      }
      sum.add(cell);
    }
  }
  return sum.value();
}

}  // namespace oracle
