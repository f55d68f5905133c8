#include <array>
#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

#include "bzeta/errors.hpp"
#include "bzeta/numerics.hpp"

namespace bzeta {

namespace {

constexpr int kMaxBernoulli = 64;

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

struct BernoulliTable {
  std::array<double, kMaxBernoulli + 1> value{};
  std::array<double, kMaxBernoulli + 1> over_factorial{};
};

// sum_{j=0}^{n} C(n+1, j) B_j = 0, solved for B_n in exact rationals.
BernoulliTable build_table() {
  std::vector<cpp_rational> exact(kMaxBernoulli + 1);
  exact[0] = 1;
  for (int n = 1; n <= kMaxBernoulli; ++n) {
    cpp_rational acc = 0;
    cpp_int binom = 1;  // C(n+1, j)
    for (int j = 0; j < n; ++j) {
      acc += cpp_rational(binom) * exact[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    exact[n] = -acc / (n + 1);
  }
  BernoulliTable table;
  cpp_int factorial = 1;
  for (int n = 0; n <= kMaxBernoulli; ++n) {
    if (n > 0) factorial *= n;
    table.value[n] = static_cast<double>(exact[n]);
    table.over_factorial[n] = static_cast<double>(exact[n] / cpp_rational(factorial));
  }
  return table;
}

const BernoulliTable& table() {
  static const BernoulliTable t = build_table();
  return t;
}

}  // namespace

std::vector<double> bernoulli_numbers(int n_max) {
  if (n_max < 0 || n_max > kMaxBernoulli) {
    throw ArgumentError("bernoulli_numbers: n_max must lie in [0, 64]");
  }
  const auto& t = table();
  return {t.value.begin(), t.value.begin() + n_max + 1};
}

double bernoulli_over_factorial(int n) {
  if (n < 0) throw ArgumentError("bernoulli_over_factorial: negative index");
  if (n == 1) return -0.5;
  if (n % 2 == 1) return 0.0;
  if (n <= kMaxBernoulli) return table().over_factorial[n];
  // |B_n| / n! = 2 zeta(n) / (2 pi)^n, and zeta(n) = 1 to double precision here.
  const double magnitude = 2.0 * std::pow(2.0 * std::numbers::pi, -n);
  return (n / 2) % 2 == 1 ? magnitude : -magnitude;
}

}  // namespace bzeta
