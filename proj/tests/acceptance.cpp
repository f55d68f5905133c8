// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "bzeta/hurwitz.hpp"
#include "bzeta/laurent.hpp"
#include "bzeta/verify.hpp"
#include "cli.hpp"

using namespace bzeta;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %2d. %s: %s\n", o.pass ? "PASS" : "FAIL", n, title.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

const std::vector<BarnesParams> kNamed{{1, 1, 1}, {0.5, 1, 1}, {1, 1, 2}, {2, 3, 1}, {0.7, 1.3, 2.1}};

}  // namespace

int main() {
  const EvalConfig cfg;
  const std::vector<BarnesParams> suite = default_parameter_suite(kDefaultSeed);

  criterion(1, "residue at s=2 equals 1/(vw) on the 10-triple suite", [&] {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (const BarnesParams& p : suite) {
      worst = std::max(worst, std::abs(laurent_at_2(p, 0, cfg).gamma_minus1 - 1.0 / (p.v * p.w)));
    }
    const double t = seconds_since(t0);
    return Outcome{worst < 1e-10 && t < 5.0, fmt("max abs err %.3g (< 1e-10), %.2f s (< 5 s)", worst, t)};
  });

  criterion(2, "residue at s=1 equals (v+w-2 alpha)/(2vw) on the 10-triple suite", [&] {
    double worst = 0.0;
    for (const BarnesParams& p : suite) {
      const double exact = (p.v + p.w - 2 * p.alpha) / (2 * p.v * p.w);
      worst = std::max(worst, std::abs(laurent_at_1(p, 0, cfg).gamma_minus1 - exact));
    }
    return Outcome{worst < 1e-10, fmt("max abs err %.3g (< 1e-10)", worst)};
  });

  criterion(3, "v=w reduction on a 40-point grid", [&] {
    double worst = 0.0;
    const auto grid = default_reduction_grid();
    for (const BarnesParams& p : default_reduction_params()) {
      const double a = p.alpha / p.v;
      for (ComplexValue s : grid) {
        const ComplexValue rhs =
            std::pow(p.v, -s) * (hurwitz_zeta(s - 1.0, a, cfg) + (1.0 - a) * hurwitz_zeta(s, a, cfg));
        worst = std::max(worst, std::abs(zeta2(s, p, cfg) - rhs));
      }
    }
    return Outcome{grid.size() == 40 && worst < 1e-9,
                   fmt("%g points x 3 triples, max abs err %.3g (< 1e-9)", static_cast<double>(grid.size()), worst)};
  });

  criterion(4, "gamma_k(2,1;1,1) recovers the Stieltjes constants, k=0..4", [&] {
    const LaurentExpansion e = laurent_at_2({1, 1, 1}, 4, cfg);
    const StieltjesTable t = stieltjes_constants(1.0, 4, cfg);
    double worst = 0.0;
    for (int k = 0; k <= 4; ++k) worst = std::max(worst, std::abs(e.gammas[k] - t.gammas[k]));
    const double g0 = std::abs(e.gammas[0] - 0.57721566490153286);
    return Outcome{worst < 1e-8 && g0 < 1e-8,
                   fmt("max abs err %.3g (< 1e-8), |gamma_0 - 0.5772156649| = %.3g", worst, g0)};
  });

  criterion(5, "s=1 is a regular point for alpha=v=w=1", [&] {
    const LaurentExpansion e = laurent_at_1({1, 1, 1}, 1, cfg);
    ContourSpec spec = cfg.contour;
    spec.center = 0.0;
    spec.max_order = 1;
    const ContourCoefficients z = contour_coefficients(
        [&](ComplexValue s) { return hurwitz_zeta(s, 1.0, cfg); }, spec, 0, Symmetry::conjugate);
    const double zeta_prime_0 = z.at(1).real();
    const double e_m1 = std::abs(e.gamma_minus1), e0 = std::abs(e.gammas[0] + 0.5),
                 e1 = std::abs(e.gammas[1] - zeta_prime_0);
    const bool oracle_ok = std::abs(zeta_prime_0 + 0.5 * std::log(2 * std::numbers::pi)) < 1e-10;
    return Outcome{e_m1 < 1e-10 && e0 < 1e-8 && e1 < 1e-7 && oracle_ok,
                   fmt("|gamma_-1| %.3g, |gamma_0 + 1/2| %.3g, |gamma_1 - zeta'(0)| %.3g", e_m1, e0, e1)};
  });

  criterion(6, "sawtooth-integral gamma_0(2) agrees with the contour on 5 sets", [&] {
    double worst = 0.0, slowest = 0.0;
    for (const BarnesParams& p : kNamed) {
      const auto t0 = Clock::now();
      const RealEstimate g = gamma0_at_2_integral(p, cfg);
      slowest = std::max(slowest, seconds_since(t0));
      worst = std::max(worst, std::abs(g.value - laurent_at_2(p, 0, cfg).gammas[0]));
    }
    return Outcome{worst < 1e-6 && slowest < 10.0,
                   fmt("max abs err %.3g (< 1e-6), slowest evaluation %.2f s (< 10 s)", worst, slowest)};
  });

  criterion(7, "accelerated limit formula agrees with the contour for k=0,1,2 on 5 sets", [&] {
    double worst = 0.0;
    for (const BarnesParams& p : kNamed) {
      const LaurentExpansion e = laurent_at_2(p, 2, cfg);
      const auto lim = gammak_at_2_limit_all(p, 2, default_limit_M_list(), true);
      for (int k = 0; k <= 2; ++k) worst = std::max(worst, std::abs(e.gammas[k] - lim[k].value));
    }
    return Outcome{worst < 1e-4 && default_limit_M_list().back() == 4096,
                   fmt("M up to 2^12, max abs err %.3g (< 1e-4)", worst)};
  });

  criterion(8, "gamma_k(1) = -d/dalpha zeta_2^(k+1)(0)/(k+1)!, k=-1..3 on 5 sets", [&] {
    double worst = 0.0, closed = 0.0;
    bool complete = true;
    for (const BarnesParams& p : kNamed) {
      const VerificationReport r = verify_theorem2_derivative(p, 3, 1e-6, cfg);
      for (const Check& c : r.checks) {
        complete = complete && !c.error;
        if (c.id.ends_with("closed_form")) {
          closed = std::max(closed, c.abs_err);
        } else {
          worst = std::max(worst, c.abs_err);
        }
      }
    }
    return Outcome{complete && worst < 1e-6 && closed < 1e-8,
                   fmt("max abs err %.3g (< 1e-6), v=w=1 closed form 1-alpha err %.3g (< 1e-8)", worst, closed)};
  });

  criterion(9, "alternating-sum identity for k=0..3 on 5 sets", [&] {
    double worst = 0.0, k0 = 0.0;
    bool complete = true;
    for (const BarnesParams& p : kNamed) {
      const VerificationReport r = verify_theorem2_altsum(p, 3, 1e-4, cfg);
      for (const Check& c : r.checks) {
        complete = complete && !c.error;
        worst = std::max(worst, c.abs_err);
        if (c.id.ends_with("altsum_k0")) k0 = std::max(k0, c.abs_err);
      }
    }
    return Outcome{complete && worst < 1e-4,
                   fmt("max abs err %.3g (< 1e-4); k=0 (d gamma_-1 - d gamma_0 = gamma_0(2)) err %.3g", worst, k0)};
  });

  criterion(10, "Berndt (a in {0.1,0.3,0.5,1}) and Finch inequalities, k=1..10", [&] {
    const VerificationReport r = verify_bounds(10, {0.1, 0.3, 0.5, 1.0}, cfg);
    double slack = 1e300;
    for (const Check& c : r.checks) slack = std::min(slack, c.rhs - c.lhs);
    return Outcome{r.all_pass() && r.checks.size() == 50,
                   fmt("%g/50 checks hold, smallest slack rhs-lhs %.3g", 50.0 - r.failures(), slack)};
  });

  criterion(11, "homogeneity, symmetry and row removal on random triples", [&] {
    std::mt19937_64 gen(kDefaultSeed + 11);
    const auto draw = [&](double lo, double hi) {
      return lo + (hi - lo) * std::ldexp(static_cast<double>(gen() >> 11), -53);
    };
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const BarnesParams p{draw(0.1, 5), draw(0.1, 5), draw(0.1, 5)};
      for (const ComplexValue s : {ComplexValue{3.0, draw(-10, 10)}, ComplexValue{draw(-1.5, 0.8), draw(-5, 5)}}) {
        const ComplexValue z = zeta2(s, p, cfg);
        const double scale = std::max(1.0, std::abs(z));
        const double lambda = draw(0.5, 3.0);
        const ComplexValue scaled = zeta2(s, {lambda * p.alpha, lambda * p.v, lambda * p.w}, cfg);
        worst = std::max(worst, std::abs(scaled - std::pow(lambda, -s) * z) / scale);
        worst = std::max(worst, std::abs(zeta2(s, {p.alpha, p.w, p.v}, cfg) - z) / scale);
        const ComplexValue row = std::pow(p.w, -s) * hurwitz_zeta(s, p.alpha / p.w, cfg);
        worst = std::max(worst, std::abs(z - zeta2(s, {p.alpha + p.v, p.v, p.w}, cfg) - row) / scale);
      }
    }
    return Outcome{worst < 1e-10, fmt("max err / max(1,|zeta_2|) %.3g (< 1e-10), sigma = 3 and sigma in [-1.5, 0.8]", worst)};
  });

  criterion(12, "verify --suite all exits 0 in under 3 minutes", [&] {
    std::ostringstream out, err;
    const auto t0 = Clock::now();
    const int code = cli::run({"verify", "--suite", "all"}, out, err);
    const double t = seconds_since(t0);
    return Outcome{code == 0 && t < 180.0, fmt("exit %g, %.1f s (< 180 s)", code, t)};
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
