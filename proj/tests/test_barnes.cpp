#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "bzeta/barnes.hpp"
#include "bzeta/errors.hpp"
#include "bzeta/hurwitz.hpp"
#include "oracles.hpp"

using namespace bzeta;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta3 = 1.2020569031595942854;

// Counting lattice points m + 2n = N - 1 gives
// zeta_2(s, 1; 1, 2) = zeta(s-1)/2 + (1 - 2^{-s}) zeta(s)/2.
ComplexValue zeta2_one_one_two(ComplexValue s, const EvalConfig& cfg) {
  return 0.5 * riemann_zeta(s - 1.0, cfg) +
         0.5 * (1.0 - std::pow(2.0, -s)) * riemann_zeta(s, cfg);
}

// zeta_2(s, alpha; v, v) = v^{-s} [zeta_H(s-1, a) + (1 - a) zeta_H(s, a)], a = alpha/v.
ComplexValue zeta2_equal_periods(ComplexValue s, double alpha, double v, const EvalConfig& cfg) {
  const double a = alpha / v;
  return std::pow(v, -s) * (hurwitz_zeta(s - 1.0, a, cfg) + (1.0 - a) * hurwitz_zeta(s, a, cfg));
}

// Taylor coefficient c_1 of zeta_H(., a) about a regular point, by the contour path.
double hurwitz_s_derivative(double s0, double a, const EvalConfig& cfg) {
  ContourSpec spec;
  spec.center = s0;
  spec.radius = 0.5;
  spec.max_order = 2;
  spec.nodes = 64;
  const auto c = contour_coefficients([&](ComplexValue s) { return hurwitz_zeta(s, a, cfg); },
                                      spec, 0, Symmetry::none);
  return c.at(1).real();
}

BarnesParams random_params(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> d(0.1, 5.0);
  return {d(gen), d(gen), d(gen)};
}

}  // namespace

TEST_CASE("zeta2_direct: diagonal count gives zeta(3)") {
  const Estimate e = zeta2_direct(4.0, {1, 1, 1}, 2000);
  CHECK(std::abs(e.value - kZeta3) <= e.error);
  CHECK(e.error < 1e-7);
}

TEST_CASE("zeta2_direct: alpha = 1, v = 1, w = 2 at s = 3") {
  const EvalConfig cfg;
  const double exact = kPi * kPi / 12.0 + 7.0 / 16.0 * kZeta3;
  const Estimate e = zeta2_direct(3.0, {1, 1, 2}, 10000);
  CHECK(std::abs(e.value - exact) <= e.error);
  CHECK(std::abs(zeta2_one_one_two(3.0, cfg) - exact) < 1e-13);
}

TEST_CASE("zeta2_direct: monotone in M for real s") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 5; ++trial) {
    const BarnesParams p = random_params(gen);
    double previous = 0.0;
    for (int M : {4, 8, 16, 32, 64}) {
      const double value = zeta2_direct(2.5, p, M).value.real();
      CHECK(value >= previous);
      previous = value;
    }
  }
  CHECK_THROWS_AS(zeta2_direct(2.0, {1, 1, 1}, 10), DomainError);
  CHECK_THROWS_AS(zeta2_direct({3.0, 1.0}, {0, 1, 1}, 10), ArgumentError);
}

TEST_CASE("zeta2: equal periods reduce to Hurwitz values") {
  const EvalConfig cfg;
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> sig(-3.0, 6.0), tee(-8.0, 8.0), pos(0.2, 4.0);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexValue s{sig(gen), tee(gen)};
    const double alpha = pos(gen), v = pos(gen);
    const ComplexValue expected = zeta2_equal_periods(s, alpha, v, cfg);
    const Estimate got = zeta2_estimate(s, {alpha, v, v}, cfg);
    const double a = alpha / v;
    const double oracle_error =
        std::pow(v, -s.real()) * (hurwitz_zeta_estimate(s - 1.0, a, cfg).error +
                                  std::abs(1.0 - a) * hurwitz_zeta_estimate(s, a, cfg).error);
    INFO("s = ", s.real(), " + ", s.imag(), "i");
    CHECK(std::abs(got.value - expected) <= got.error + oracle_error);
    if (s.real() > -1.0) {
      CHECK(std::abs(got.value - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
    }
  }
  CHECK(std::abs(zeta2(0.0, {1, 1, 1}, cfg) + 1.0 / 12.0) < 1e-12);
}

TEST_CASE("zeta2: lattice count oracle for v = 1, w = 2") {
  const EvalConfig cfg;
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> tee(-20.0, 20.0), sig(-2.0, 6.0);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexValue s3{3.0, tee(gen)};
    CHECK(std::abs(zeta2(s3, {1, 1, 2}, cfg) - zeta2_one_one_two(s3, cfg)) < 1e-10);
    const ComplexValue s{sig(gen), tee(gen)};
    const ComplexValue expected = zeta2_one_one_two(s, cfg);
    CHECK(std::abs(zeta2(s, {1, 1, 2}, cfg) - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
    CHECK(std::abs(zeta2(s, {1, 2, 1}, cfg) - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("zeta2: agrees with the direct sum") {
  const EvalConfig cfg;
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> tee(-10.0, 10.0);
  for (int trial = 0; trial < 6; ++trial) {
    const BarnesParams p = random_params(gen);
    // sigma = 6: the square truncation is exact to ~M^{-4}
    const ComplexValue s6{6.0, tee(gen)};
    const Estimate direct6 = zeta2_direct(s6, p, 3000);
    CHECK(direct6.error < 1e-10);
    CHECK(std::abs(zeta2(s6, p, cfg) - direct6.value) < 1e-10);
    // sigma = 3: only within the direct tail bound
    const ComplexValue s3{3.0, tee(gen)};
    const Estimate direct3 = zeta2_direct(s3, p, 400);
    const Estimate em = zeta2_estimate(s3, p, cfg);
    CHECK(std::abs(em.value - direct3.value) <= direct3.error + em.error);
  }
}

TEST_CASE("zeta2: homogeneity, symmetry and row removal at sigma = 3") {
  const EvalConfig cfg;
  std::mt19937_64 gen(19);
  std::uniform_real_distribution<double> tee(-10.0, 10.0);
  for (int trial = 0; trial < 10; ++trial) {
    const BarnesParams p = random_params(gen);
    const ComplexValue s{3.0, tee(gen)};
    const ComplexValue z = zeta2(s, p, cfg);
    for (double lambda : {0.5, 2.0, 3.0}) {
      const ComplexValue scaled = zeta2(s, {lambda * p.alpha, lambda * p.v, lambda * p.w}, cfg);
      CHECK(std::abs(scaled - std::pow(lambda, -s) * z) < 1e-10);
    }
    CHECK(std::abs(zeta2(s, {p.alpha, p.w, p.v}, cfg) - z) < 1e-10);
    const ComplexValue shifted = zeta2(s, {p.alpha + p.v, p.v, p.w}, cfg);
    const ComplexValue row = std::pow(p.w, -s) * hurwitz_zeta(s, p.alpha / p.w, cfg);
    CHECK(std::abs(z - shifted - row) < 1e-10);
  }
}

TEST_CASE("zeta2: symmetry and row removal in the continued region") {
  const EvalConfig cfg;
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> sig(-3.0, 1.8), tee(-5.0, 5.0);
  for (int trial = 0; trial < 10; ++trial) {
    const BarnesParams p = random_params(gen);
    const ComplexValue s{sig(gen), tee(gen)};
    const Estimate z = zeta2_estimate(s, p, cfg);
    const Estimate swapped = zeta2_estimate(s, {p.alpha, p.w, p.v}, cfg);
    const double scale = std::max(1.0, std::abs(z.value));
    CHECK(std::abs(swapped.value - z.value) < 1e-10 * scale);
    CHECK(std::abs(swapped.value - z.value) <= z.error + swapped.error + 1e-12 * scale);
    const Estimate shifted = zeta2_estimate(s, {p.alpha + p.v, p.v, p.w}, cfg);
    const Estimate row = hurwitz_zeta_estimate(s, p.alpha / p.w, cfg);
    const double row_scale = std::pow(p.w, -s.real());
    CHECK(std::abs(z.value - shifted.value - std::pow(p.w, -s) * row.value) <=
          z.error + shifted.error + row_scale * row.error + 1e-12 * scale);
  }
}

TEST_CASE("zeta2: stable under doubling M and raising J") {
  EvalConfig base;
  EvalConfig refined = base;
  refined.direct_M *= 2;
  refined.em_order += 2;
  std::mt19937_64 gen(29);
  std::uniform_real_distribution<double> sig(-4.0, 5.0), tee(-8.0, 8.0);
  for (int trial = 0; trial < 20; ++trial) {
    const BarnesParams p = random_params(gen);
    const ComplexValue s{sig(gen), tee(gen)};
    if (std::abs(s - 1.0) < 0.05 || std::abs(s - 2.0) < 0.05) continue;
    const Estimate x = zeta2_estimate(s, p, base);
    const Estimate y = zeta2_estimate(s, p, refined);
    INFO("s = ", s.real(), " + ", s.imag(), "i");
    CHECK(std::abs(x.value - y.value) <= x.error + y.error);
  }
}

TEST_CASE("zeta2: poles and domain") {
  const EvalConfig cfg;
  CHECK_THROWS_AS(zeta2(1.0, {1, 1, 1}, cfg), PoleError);
  CHECK_THROWS_AS(zeta2(2.0, {1, 2, 3}, cfg), PoleError);
  CHECK_THROWS_AS(zeta2(-25.0, {1, 2, 3}, cfg), DomainError);
  CHECK_THROWS_AS(zeta2(0.5, {1, -2, 3}, cfg), ArgumentError);
  // pole cancellation points s = 0, -2, ... are regular
  CHECK(std::isfinite(zeta2(-2.0, {0.3, 1.7, 0.9}, cfg).real()));
}

TEST_CASE("zeta2_integral_rep") {
  const EvalConfig cfg;
  SUBCASE("reduction at sigma = 2.5") {
    for (double t : {0.0, 1.0, -4.0}) {
      const ComplexValue s{2.5, t};
      const Estimate rep = zeta2_integral_rep(s, {1, 1, 1}, cfg);
      CHECK(std::abs(rep.value - riemann_zeta(s - 1.0, cfg)) < 1e-6);
    }
  }
  SUBCASE("direct and lattice oracles at s = 3") {
    const Estimate rep = zeta2_integral_rep(3.0, {1, 1, 2}, cfg);
    CHECK(std::abs(rep.value - zeta2_one_one_two(3.0, cfg)) < 1e-6);
    const Estimate direct = zeta2_direct(3.0, {1, 1, 2}, 2000);
    CHECK(std::abs(rep.value - direct.value) <= rep.error + direct.error);
  }
  SUBCASE("principal part at s = 2") {
    const BarnesParams p{0.7, 1.3, 2.1};
    double previous = 1.0;
    for (double h : {1e-1, 1e-2, 1e-3, 1e-4}) {
      const double residue = h * zeta2_integral_rep(2.0 + h, p, cfg).value.real();
      const double gap = std::abs(residue - 1.0 / (p.v * p.w));
      CHECK(gap < previous);
      previous = gap;
    }
    CHECK(previous < 1e-3);
  }
  SUBCASE("agrees with zeta2 within combined estimates") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> sig(1.3, 4.0), tee(-3.0, 3.0);
    for (int trial = 0; trial < 4; ++trial) {
      const BarnesParams p = random_params(gen);
      const ComplexValue s{sig(gen), tee(gen)};
      const Estimate rep = zeta2_integral_rep(s, p, cfg);
      const Estimate em = zeta2_estimate(s, p, cfg);
      INFO("s = ", s.real(), " + ", s.imag(), "i");
      CHECK(std::abs(rep.value - em.value) <= rep.error + em.error);
      CHECK(rep.error < 1e-6);
    }
  }
  CHECK_THROWS_AS(zeta2_integral_rep(1.0, {1, 1, 1}, cfg), DomainError);
  CHECK_THROWS_AS(zeta2_integral_rep(2.0, {1, 1, 1}, cfg), PoleError);
}

TEST_CASE("zeta2_s_derivatives_at_0: alpha = v = w = 1") {
  const EvalConfig cfg;
  const auto d = zeta2_s_derivatives_at_0(BarnesParams{1, 1, 1}, 4, cfg);
  REQUIRE(d.size() == 5);
  CHECK(std::abs(d[0] + 1.0 / 12.0) < 1e-12);
  const double zeta_prime_m1 = hurwitz_s_derivative(-1.0, 1.0, cfg);
  CHECK(std::abs(zeta_prime_m1 + 0.16542114370045092) < 1e-12);
  CHECK(std::abs(d[1] - zeta_prime_m1) < 1e-11);
  for (const auto& x : d) CHECK(std::abs(x.imag()) < 1e-10);
}

TEST_CASE("log_gamma2") {
  const EvalConfig cfg;
  CHECK(std::abs(log_gamma2({1, 1, 1}, cfg) + 0.16542114370045092) < 1e-11);
  // zeta_2(s, 2; 1, 1) = zeta_H(s-1, 2) - zeta_H(s, 2)
  const double expected = hurwitz_s_derivative(-1.0, 2.0, cfg) - hurwitz_s_derivative(0.0, 2.0, cfg);
  CHECK(std::abs(expected - (-0.16542114370045092 + 0.9189385332046727)) < 1e-12);
  CHECK(std::abs(log_gamma2({2, 1, 1}, cfg) - expected) < 1e-11);
  std::mt19937_64 gen(37);
  for (int trial = 0; trial < 10; ++trial) {
    const BarnesParams p = random_params(gen);
    const double g = std::exp(log_gamma2(p, cfg));
    CHECK(std::isfinite(g));
    CHECK(g > 0.0);
  }
}

TEST_CASE("polygamma2") {
  EvalConfig cfg;
  const BarnesParams unit{1, 1, 1};
  CHECK(polygamma2(0, unit, cfg) == log_gamma2(unit, cfg));
  // d/dalpha zeta_2'(0, alpha; 1, 1) at alpha = 1: zeta_2 = zeta_H(s-1, a) + (1-a) zeta_H(s, a)
  const RealEstimate psi = polygamma2_estimate(1, unit, cfg);
  CHECK(std::abs(psi.value - 0.5) < 1e-6);
  CHECK(psi.error < 1e-6);

  // large steps, where truncation rather than round-off dominates
  const BarnesParams p{2.0, 0.8, 1.5};
  for (int k = 1; k <= 2; ++k) {
    EvalConfig coarse_cfg = cfg;
    coarse_cfg.fd_step = 0.2;
    EvalConfig fine_cfg = cfg;
    fine_cfg.fd_step = 0.1;
    const RealEstimate coarse = polygamma2_estimate(k, p, coarse_cfg);
    const RealEstimate fine = polygamma2_estimate(k, p, fine_cfg);
    CHECK(coarse.error >= 4.0 * fine.error);
    CHECK(std::abs(coarse.value - fine.value) <= coarse.error + fine.error);
  }
  // psi_2^{(k)} of alpha = v = w = 1 from the reduction, by differencing an analytic formula
  const auto reduced = [&](double a) {
    const double d = hurwitz_s_derivative(-1.0, a, cfg) +
                     (1.0 - a) * hurwitz_s_derivative(0.0, a, cfg);
    return RealEstimate{d, 1e-15};
  };
  for (int k = 2; k <= 3; ++k) {
    const RealEstimate lib = polygamma2_estimate(k, unit, cfg);
    const RealEstimate ref = alpha_derivative(reduced, 1.0, k, 1.0 / 64.0);
    INFO("k = ", k, " lib ", lib.value, " +- ", lib.error, " ref ", ref.value, " +- ", ref.error);
    CHECK(std::abs(lib.value - ref.value) <= lib.error + ref.error);
  }
  cfg.fd_step = 0.3;
  CHECK_THROWS_AS(polygamma2(1, unit, cfg), ArgumentError);
  CHECK_THROWS_AS(polygamma2(5, unit, EvalConfig{}), ArgumentError);
}

TEST_CASE("alpha_derivative: polynomials and exponentials") {
  const auto cubic = [](double x) { return RealEstimate{x * x * x, 0.0}; };
  CHECK(alpha_derivative(cubic, 2.0, 1, 0.1).value == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(alpha_derivative(cubic, 2.0, 2, 0.1).value == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(alpha_derivative(cubic, 2.0, 3, 0.1).value == doctest::Approx(6.0).epsilon(1e-9));
  const auto e = [](double x) { return RealEstimate{std::exp(x), 0.0}; };
  for (int k = 1; k <= 4; ++k) {
    const RealEstimate d = alpha_derivative(e, 0.3, k, 0.05);
    CHECK(std::abs(d.value - std::exp(0.3)) <= d.error);
  }
}
