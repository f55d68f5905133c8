#pragma once

#include <cmath>
#include <complex>

namespace bzeta {

using ComplexValue = std::complex<double>;

/// A value together with an estimate of its absolute error.
struct Estimate {
  ComplexValue value{};
  double error = 0.0;
};

struct RealEstimate {
  double value = 0.0;
  double error = 0.0;
};

inline bool is_finite(ComplexValue z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace bzeta
