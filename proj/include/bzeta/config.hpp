#pragma once

#include "bzeta/numerics.hpp"

namespace bzeta {

/// Truncation and precision knobs shared by every evaluator.
struct EvalConfig {
  int direct_M = 16;   // terms summed before the Euler-Maclaurin tail
  int em_order = 12;   // Bernoulli terms B_2 .. B_{2 em_order} in the tail
  QuadratureSpec quad{};
  ContourSpec contour{};
  double fd_step = 1e-3;  // finite-difference step in alpha

  void validate() const;
};

}  // namespace bzeta
