#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "bzeta/errors.hpp"
#include "bzeta/hurwitz.hpp"
#include "bzeta/verify.hpp"

namespace bzeta {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string tag(const BarnesParams& p) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "alpha=%.6g,v=%.6g,w=%.6g", p.alpha, p.v, p.w);
  return buf;
}

std::string order_tag(int k) { return k < 0 ? "km1" : "k" + std::to_string(k); }

Check failed_check(std::string id, double tol, const std::string& what) {
  Check c;
  c.id = std::move(id);
  c.lhs = c.rhs = c.abs_err = c.rel_err = kNaN;
  c.tol = tol;
  c.pass = false;
  c.error = what;
  return c;
}

// Runs body; if it throws, records one failed check per id in ids.
template <class Body>
void guarded(VerificationReport& r, const std::vector<std::pair<std::string, double>>& ids,
             Body body) {
  try {
    body();
  } catch (const std::exception& e) {
    for (const auto& [id, tol] : ids) r.checks.push_back(failed_check(id, tol, e.what()));
  }
}

VerificationReport start(std::string suite, const EvalConfig& cfg) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.config = cfg;
  return r;
}

bool same_double(double a, double b) {
  return (std::isnan(a) && std::isnan(b)) || a == b;
}

// Memoized f(alpha) -> vector of estimates, for stencils shared across orders.
class AlphaTable {
public:
  using Fn = std::function<std::vector<RealEstimate>(double)>;
  explicit AlphaTable(Fn fn) : fn_(std::move(fn)) {}
  const std::vector<RealEstimate>& at(double alpha) {
    auto it = cache_.find(alpha);
    if (it == cache_.end()) it = cache_.emplace(alpha, fn_(alpha)).first;
    return it->second;
  }

private:
  Fn fn_;
  std::map<double, std::vector<RealEstimate>> cache_;
};

std::vector<RealEstimate> expansion_values(const LaurentExpansion& e) {
  std::vector<RealEstimate> out{{e.gamma_minus1, e.gamma_minus1_err}};
  for (std::size_t k = 0; k < e.gammas.size(); ++k) out.push_back({e.gammas[k], e.errs[k]});
  return out;
}

}  // namespace

bool VerificationReport::all_pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  for (const BarnesParams& p : other.params) {
    const bool seen = std::any_of(params.begin(), params.end(), [&](const BarnesParams& q) {
      return q.alpha == p.alpha && q.v == p.v && q.w == p.w;
    });
    if (!seen) params.push_back(p);
  }
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
  estimates.insert(estimates.end(), other.estimates.begin(), other.estimates.end());
}

void VerificationReport::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.id < b.id; });
}

Check make_check(std::string id, double lhs, double rhs, double tol) {
  Check c;
  c.id = std::move(id);
  c.lhs = lhs;
  c.rhs = rhs;
  c.abs_err = std::abs(lhs - rhs);
  c.rel_err = rhs != 0.0 ? c.abs_err / std::abs(rhs) : c.abs_err;
  c.tol = tol;
  c.pass = c.abs_err <= tol || c.rel_err <= tol;
  return c;
}

Check make_bound_check(std::string id, double lhs, double rhs) {
  Check c;
  c.id = std::move(id);
  c.lhs = lhs;
  c.rhs = rhs;
  c.abs_err = std::max(0.0, lhs - rhs);
  c.rel_err = rhs != 0.0 ? c.abs_err / std::abs(rhs) : c.abs_err;
  c.tol = 0.0;
  c.pass = c.abs_err <= 0.0;
  return c;
}

std::uint64_t suite_seed() {
  const char* env = std::getenv("BARNES_ZETA_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  errno = 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || *env == '-' || *env == '+') {
    throw ArgumentError(std::string("BARNES_ZETA_SEED is not a decimal integer: ") + env);
  }
  return value;
}

std::vector<BarnesParams> default_parameter_suite(std::uint64_t seed, int random_count) {
  std::vector<BarnesParams> out{{1, 1, 1}, {0.5, 1, 1}, {1, 1, 2}, {2, 3, 1}, {0.7, 1.3, 2.1}};
  std::mt19937_64 gen(seed);
  // 5 - 4.9 u with u in [0, 1) on a 2^-53 grid: (0.1, 5]
  const auto draw = [&] { return 5.0 - 4.9 * std::ldexp(static_cast<double>(gen() >> 11), -53); };
  for (int i = 0; i < random_count; ++i) {
    const double alpha = draw(), v = draw(), w = draw();
    out.push_back({alpha, v, w});
  }
  return out;
}

std::vector<BarnesParams> default_reduction_params() { return {{1, 1, 1}, {0.5, 1, 1}, {2, 2, 2}}; }

std::vector<ComplexValue> default_reduction_grid() {
  std::vector<ComplexValue> out;
  for (int j = 0; j < 10; ++j) {
    for (double t : {-4.5, -1.5, 1.5, 4.5}) out.emplace_back(-0.5 + 0.5 * j, t);
  }
  return out;
}

VerificationReport verify_theorem1(const BarnesParams& p, int k_max, std::optional<double> tol,
                                   const EvalConfig& cfg) {
  if (k_max < 0 || k_max > 4) throw ArgumentError("verify_theorem1: k_max must lie in 0..4");
  VerificationReport r = start("theorem1", cfg);
  r.params.push_back(p);
  const std::string base = "theorem1/" + tag(p) + "/";
  const double t_exact = tol.value_or(kClosedFormTol);
  const double t_integral = tol.value_or(kDerivativeTol);
  const double t_limit = tol.value_or(kLimitTol);

  std::optional<LaurentExpansion> at2;
  guarded(r, {{base + "residue_s2", t_exact}, {base + "gamma0_integral", t_integral}}, [&] {
    at2 = laurent_at_2(p, k_max, cfg);
    r.checks.push_back(make_check(base + "residue_s2", at2->gamma_minus1, 1.0 / (p.v * p.w), t_exact));
  });
  guarded(r, {{base + "residue_s1", t_exact}}, [&] {
    const LaurentExpansion at1 = laurent_at_1(p, 0, cfg);
    r.checks.push_back(make_check(base + "residue_s1", at1.gamma_minus1,
                                  (p.v + p.w - 2.0 * p.alpha) / (2.0 * p.v * p.w), t_exact));
  });
  if (at2) {
    guarded(r, {{base + "gamma0_integral", t_integral}}, [&] {
      const RealEstimate g = gamma0_at_2_integral(p, cfg);
      r.checks.push_back(make_check(base + "gamma0_integral", at2->gammas[0], g.value, t_integral));
    });
  }
  std::vector<std::pair<std::string, double>> limit_ids;
  for (int k = 0; k <= k_max; ++k) limit_ids.push_back({base + "limit_" + order_tag(k), t_limit});
  if (!at2) {
    for (const auto& [id, t] : limit_ids) r.checks.push_back(failed_check(id, t, "contour failed"));
    return r;
  }
  guarded(r, limit_ids, [&] {
    const auto lim = gammak_at_2_limit_all(p, k_max, default_limit_M_list(), true);
    for (int k = 0; k <= k_max; ++k) {
      r.checks.push_back(make_check(limit_ids[k].first, at2->gammas[k], lim[k].value, t_limit));
    }
  });
  return r;
}

VerificationReport verify_theorem2_derivative(const BarnesParams& p, int k_max,
                                              std::optional<double> tol, const EvalConfig& cfg) {
  if (k_max < -1 || k_max > 3) {
    throw ArgumentError("verify_theorem2_derivative: k_max must lie in -1..3");
  }
  VerificationReport r = start("theorem2", cfg);
  r.params.push_back(p);
  const std::string base = "theorem2/" + tag(p) + "/derivative_";
  const double t = tol.value_or(kDerivativeTol);
  std::vector<std::pair<std::string, double>> ids;
  for (int k = -1; k <= k_max; ++k) ids.push_back({base + order_tag(k), t});
  const bool unit = p.v == 1.0 && p.w == 1.0;
  if (unit) ids.push_back({base + "km1_closed_form", tol.value_or(1e-8)});

  guarded(r, ids, [&] {
    const double h = effective_fd_step(p.alpha, cfg);
    const LaurentExpansion at1 = laurent_at_1(p, std::max(k_max, 0), cfg);
    // zeta2^{(j)}(0) / j!, j = 0 .. k_max + 1
    AlphaTable taylor([&](double a) {
      const auto d = zeta2_s_derivatives_at_0_estimate({a, p.v, p.w}, k_max + 1, cfg);
      std::vector<RealEstimate> out;
      double factorial = 1.0;
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (j > 0) factorial *= static_cast<double>(j);
        out.push_back({d[j].value.real() / factorial, d[j].error / factorial});
      }
      return out;
    });
    const auto at1_values = expansion_values(at1);
    std::vector<Check> local;
    for (int k = -1; k <= k_max; ++k) {
      const std::size_t j = static_cast<std::size_t>(k + 1);
      const RealEstimate d = alpha_derivative([&](double a) { return taylor.at(a)[j]; }, p.alpha, 1, h);
      local.push_back(make_check(base + order_tag(k), at1_values[j].value, -d.value, t));
      if (k == -1 && unit) {
        local.push_back(make_check(base + "km1_closed_form", -d.value, 1.0 - p.alpha, tol.value_or(1e-8)));
      }
    }
    r.checks.insert(r.checks.end(), local.begin(), local.end());
  });
  return r;
}

VerificationReport verify_theorem2_altsum(const BarnesParams& p, int k_max,
                                          std::optional<double> tol, const EvalConfig& cfg) {
  if (k_max < 0 || k_max > 3) throw ArgumentError("verify_theorem2_altsum: k_max must lie in 0..3");
  VerificationReport r = start("theorem2", cfg);
  r.params.push_back(p);
  const std::string base = "theorem2/" + tag(p) + "/altsum_";
  const double t = tol.value_or(kDerivativeTol);
  std::vector<std::pair<std::string, double>> ids{{base + "dkm1_closed_form", t}};
  for (int k = 0; k <= k_max; ++k) ids.push_back({base + order_tag(k), t});

  guarded(r, ids, [&] {
    const double h = effective_fd_step(p.alpha, cfg);
    AlphaTable at1([&](double a) { return expansion_values(laurent_at_1({a, p.v, p.w}, k_max, cfg)); });
    std::vector<RealEstimate> d;  // d/dalpha gamma_l(1), l = -1 .. k_max
    for (int l = -1; l <= k_max; ++l) {
      const std::size_t j = static_cast<std::size_t>(l + 1);
      d.push_back(alpha_derivative([&](double a) { return at1.at(a)[j]; }, p.alpha, 1, h));
    }
    const LaurentExpansion at2 = laurent_at_2(p, k_max, cfg);
    std::vector<Check> local{make_check(base + "dkm1_closed_form", d[0].value, -1.0 / (p.v * p.w), t)};
    for (int k = 0; k <= k_max; ++k) {
      CompensatedSum lhs;
      for (int l = -1; l <= k; ++l) {
        lhs.add(((k - l + 1) % 2 == 0 ? 1.0 : -1.0) * d[static_cast<std::size_t>(l + 1)].value);
      }
      local.push_back(make_check(base + order_tag(k), lhs.value(), at2.gammas[k], t));
    }
    r.checks.insert(r.checks.end(), local.begin(), local.end());
  });
  return r;
}

VerificationReport verify_reduction(const BarnesParams& p, const std::vector<ComplexValue>& s_grid,
                                    std::optional<double> tol, const EvalConfig& cfg) {
  p.validate();
  if (p.v != p.w) throw ArgumentError("verify_reduction: requires v = w");
  VerificationReport r = start("reduction", cfg);
  r.params.push_back(p);
  const double t = tol.value_or(kClosedFormTol);
  const double a = p.alpha / p.v;
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    const ComplexValue s = s_grid[i];
    if (std::abs(s - 1.0) < 0.1 || std::abs(s - 2.0) < 0.1) {
      throw ArgumentError("verify_reduction: grid point within 0.1 of a pole");
    }
    char idx[16];
    std::snprintf(idx, sizeof idx, "%03zu", i);
    const std::string base = "reduction/" + tag(p) + "/s" + idx + "_";
    guarded(r, {{base + "re", t}, {base + "im", t}}, [&] {
      const ComplexValue lhs = zeta2(s, p, cfg);
      const ComplexValue rhs =
          std::pow(p.v, -s) * (hurwitz_zeta(s - 1.0, a, cfg) + (1.0 - a) * hurwitz_zeta(s, a, cfg));
      r.checks.push_back(make_check(base + "re", lhs.real(), rhs.real(), t));
      r.checks.push_back(make_check(base + "im", lhs.imag(), rhs.imag(), t));
    });
  }
  return r;
}

VerificationReport verify_bounds(int k_max, const std::vector<double>& a_list, const EvalConfig& cfg) {
  if (k_max < 1 || k_max > 10) throw ArgumentError("verify_bounds: k_max must lie in 1..10");
  VerificationReport r = start("bounds", cfg);
  const double pi = std::numbers::pi;
  for (double a : a_list) {
    if (!(a > 0.0 && a <= 1.0)) throw ArgumentError("verify_bounds: each a must lie in (0, 1]");
  }
  // |gamma_k(a) - (-1)^k log^k(a)/(a k!)| <= (3 + (-1)^k)/(k pi^k)
  for (double a : a_list) {
    char atag[32];
    std::snprintf(atag, sizeof atag, "a=%.6g", a);
    std::vector<std::pair<std::string, double>> ids;
    for (int k = 1; k <= k_max; ++k) {
      ids.push_back({"bounds/berndt/" + std::string(atag) + "/k" + (k < 10 ? "0" : "") + std::to_string(k), 0.0});
    }
    guarded(r, ids, [&] {
      const StieltjesTable t = stieltjes_constants(a, k_max, cfg);
      double factorial = 1.0;
      for (int k = 1; k <= k_max; ++k) {
        factorial *= k;
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        const double lhs = std::abs(t.gammas[k] - sign * std::pow(std::log(a), k) / (a * factorial));
        const double rhs = (3.0 + sign) / (k * std::pow(pi, k));
        r.checks.push_back(make_bound_check(ids[k - 1].first, lhs, rhs));
      }
    });
  }
  // |gamma_k| <= (3 + (-1)^k) (2k)! / (k^{k+1} (2 pi)^k)
  std::vector<std::pair<std::string, double>> ids;
  for (int k = 1; k <= k_max; ++k) {
    ids.push_back({"bounds/finch/k" + std::string(k < 10 ? "0" : "") + std::to_string(k), 0.0});
  }
  guarded(r, ids, [&] {
    const StieltjesTable t = stieltjes_constants(1.0, k_max, cfg);
    for (int k = 1; k <= k_max; ++k) {
      const double sign = k % 2 == 0 ? 1.0 : -1.0;
      const double rhs = (3.0 + sign) * std::tgamma(2.0 * k + 1.0) /
                         (std::pow(k, k + 1) * std::pow(2.0 * pi, k));
      r.checks.push_back(make_bound_check(ids[k - 1].first, std::abs(t.gammas[k]), rhs));
    }
  });
  r.sort_checks();
  return r;
}

namespace {

// E(M) = -sum_{m,n<=M} 1/u + (1/vw)[U log U - U_v log U_v - U_w log U_w + alpha log alpha]
std::vector<double> divergent_difference(const BarnesParams& p, const std::vector<int>& M_list) {
  std::vector<double> out;
  CompensatedSum sum;
  std::size_t next = 0;
  const auto xlogx = [](double x) { return x * std::log(x); };
  for (int r = 0; r <= M_list.back(); ++r) {
    for (int n = 0; n <= r; ++n) sum.add(1.0 / (p.alpha + r * p.v + n * p.w));
    for (int m = 0; m < r; ++m) sum.add(1.0 / (p.alpha + m * p.v + r * p.w));
    if (r != M_list[next]) continue;
    const double M = r;
    const double integral = (xlogx(p.alpha + (p.v + p.w) * M) - xlogx(p.alpha + p.v * M) -
                             xlogx(p.alpha + p.w * M) + xlogx(p.alpha)) /
                            (p.v * p.w);
    out.push_back(-sum.value() + integral);
    ++next;
  }
  return out;
}

struct Fit {
  double C = 0.0;
  double kappa = 0.0;
};

// y = C + kappa log M + (c1 + c2 log M)/M + c3/M^2, kappa fitted unless given
Fit fit_log_model(const std::vector<int>& M, const std::vector<double>& y, std::size_t first,
                  std::optional<double> kappa) {
  const auto rows = static_cast<Eigen::Index>(M.size() - first);
  const Eigen::Index cols = kappa ? 4 : 5;
  Eigen::MatrixXd A(rows, cols);
  Eigen::VectorXd b(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double m = M[first + static_cast<std::size_t>(i)];
    const double lm = std::log(m);
    A(i, 0) = 1.0;
    A(i, 1) = 1.0 / m;
    A(i, 2) = lm / m;
    A(i, 3) = 1.0 / (m * m);
    if (!kappa) A(i, 4) = lm;
    b(i) = y[first + static_cast<std::size_t>(i)] - (kappa ? *kappa * lm : 0.0);
  }
  const Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
  return {c(0), kappa ? *kappa : c(4)};
}

}  // namespace

VerificationReport estimate_C(double v, double w, const std::vector<double>& alphas,
                              const std::vector<int>& M_list_in, const EvalConfig& cfg) {
  if (alphas.size() < 2) throw ArgumentError("estimate_C: needs at least two alpha samples");
  std::vector<int> M_list = M_list_in;
  std::sort(M_list.begin(), M_list.end());
  M_list.erase(std::unique(M_list.begin(), M_list.end()), M_list.end());
  if (M_list.size() < 5 || M_list.front() < 1) {
    throw ArgumentError("estimate_C: needs at least five positive M");
  }
  VerificationReport r = start("estimate_C", cfg);
  std::vector<double> Cs, kappas;
  double fit_error = 0.0;
  for (double alpha : alphas) {
    const BarnesParams p{alpha, v, w};
    p.validate();
    r.params.push_back(p);
    const LaurentExpansion at1 = laurent_at_1(p, 0, cfg);
    const double diff = at1.gamma_minus1_exact - at1.gammas[0];
    const double offset = alpha * std::log(alpha) / (v * w);
    std::vector<double> y;
    for (double e : divergent_difference(p, M_list)) y.push_back(diff - e + offset);
    // edge lines m = 0 and n = 0 of the lattice sum each carry half their integral
    const double kappa = 0.5 * (1.0 / v + 1.0 / w);
    const Fit all = fit_log_model(M_list, y, 0, kappa);
    const Fit tail = fit_log_model(M_list, y, 1, kappa);
    const double err = std::abs(all.C - tail.C) + at1.errs[0];
    fit_error = std::max(fit_error, err);
    Cs.push_back(all.C);
    kappas.push_back(fit_log_model(M_list, y, 0, std::nullopt).kappa);
    char name[64];
    std::snprintf(name, sizeof name, "C[alpha=%.6g]", alpha);
    r.estimates.push_back({name, all.C, err});
  }
  const auto [lo, hi] = std::minmax_element(Cs.begin(), Cs.end());
  const double spread = *hi - *lo;
  double mean = 0.0, kappa = 0.0;
  for (std::size_t i = 0; i < Cs.size(); ++i) {
    mean += Cs[i] / Cs.size();
    kappa += kappas[i] / kappas.size();
  }
  const auto [klo, khi] = std::minmax_element(kappas.begin(), kappas.end());
  r.estimates.push_back({"C", mean, spread + fit_error});
  r.estimates.push_back({"kappa", kappa, *khi - *klo});
  if (spread > 10.0 * fit_error) {
    r.warnings.push_back("estimate_C: spread across alpha exceeds 10x the extrapolation error");
  }
  return r;
}

VerificationReport run_suite(const std::string& name, const std::vector<BarnesParams>& params,
                             std::optional<double> tol, const EvalConfig& cfg) {
  static const std::vector<std::string> known{"theorem1", "theorem2", "reduction", "bounds", "all"};
  if (std::find(known.begin(), known.end(), name) == known.end()) {
    throw ArgumentError("unknown suite: " + name);
  }
  cfg.validate();
  for (const BarnesParams& p : params) p.validate();
  const bool all = name == "all";
  VerificationReport r = start(name, cfg);

  std::vector<std::future<VerificationReport>> jobs;
  for (const BarnesParams& p : params) {
    if (all || name == "theorem1") {
      jobs.push_back(std::async(std::launch::async, [=, &cfg] { return verify_theorem1(p, 2, tol, cfg); }));
    }
    if (all || name == "theorem2") {
      jobs.push_back(std::async(std::launch::async, [=, &cfg] {
        VerificationReport x = verify_theorem2_derivative(p, 3, tol, cfg);
        x.merge(verify_theorem2_altsum(p, 3, tol, cfg));
        return x;
      }));
    }
  }
  if (all || name == "reduction") {
    for (const BarnesParams& p : default_reduction_params()) {
      jobs.push_back(std::async(std::launch::async, [=, &cfg] {
        return verify_reduction(p, default_reduction_grid(), tol, cfg);
      }));
    }
  }
  if (all || name == "bounds") {
    jobs.push_back(std::async(std::launch::async, [&cfg] {
      return verify_bounds(10, {0.1, 0.3, 0.5, 1.0}, cfg);
    }));
  }
  for (auto& job : jobs) r.merge(job.get());
  r.sort_checks();
  return r;
}

nlohmann::json config_to_json(const EvalConfig& cfg) {
  return {
      {"direct_M", cfg.direct_M},
      {"em_order", cfg.em_order},
      {"fd_step", cfg.fd_step},
      {"quad", {{"cell_order", cfg.quad.cell_order},
                {"max_cells", cfg.quad.max_cells},
                {"tail_tol", cfg.quad.tail_tol}}},
      {"contour", {{"radius", cfg.contour.radius},
                   {"nodes", cfg.contour.nodes},
                   {"max_order", cfg.contour.max_order}}},
  };
}

EvalConfig config_from_json(const nlohmann::json& j) {
  EvalConfig cfg;
  cfg.direct_M = j.at("direct_M").get<int>();
  cfg.em_order = j.at("em_order").get<int>();
  cfg.fd_step = j.at("fd_step").get<double>();
  cfg.quad.cell_order = j.at("quad").at("cell_order").get<int>();
  cfg.quad.max_cells = j.at("quad").at("max_cells").get<int>();
  cfg.quad.tail_tol = j.at("quad").at("tail_tol").get<double>();
  cfg.contour.radius = j.at("contour").at("radius").get<double>();
  cfg.contour.nodes = j.at("contour").at("nodes").get<int>();
  cfg.contour.max_order = j.at("contour").at("max_order").get<int>();
  return cfg;
}

namespace {

nlohmann::json number(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(); }
double number_from(const nlohmann::json& j) { return j.is_null() ? kNaN : j.get<double>(); }

}  // namespace

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks) {
    nlohmann::json x{{"id", c.id},           {"lhs", number(c.lhs)},
                     {"rhs", number(c.rhs)}, {"abs_err", number(c.abs_err)},
                     {"rel_err", number(c.rel_err)}, {"tol", number(c.tol)},
                     {"pass", c.pass}};
    if (c.error) x["error"] = *c.error;
    checks.push_back(std::move(x));
  }
  nlohmann::json params = nlohmann::json::array();
  for (const BarnesParams& p : r.params) params.push_back({{"alpha", p.alpha}, {"v", p.v}, {"w", p.w}});
  nlohmann::json estimates = nlohmann::json::array();
  for (const NamedEstimate& e : r.estimates) {
    estimates.push_back({{"name", e.name}, {"value", number(e.value)}, {"error", number(e.error)}});
  }
  return {
      {"suite", r.suite},
      {"pass", r.all_pass()},
      {"failures", r.failures()},
      {"checks", checks},
      {"params", params},
      {"config", config_to_json(r.config)},
      {"warnings", r.warnings},
      {"estimates", estimates},
  };
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& x : j.at("checks")) {
    Check c;
    c.id = x.at("id").get<std::string>();
    c.lhs = number_from(x.at("lhs"));
    c.rhs = number_from(x.at("rhs"));
    c.abs_err = number_from(x.at("abs_err"));
    c.rel_err = number_from(x.at("rel_err"));
    c.tol = number_from(x.at("tol"));
    c.pass = x.at("pass").get<bool>();
    if (x.contains("error")) c.error = x.at("error").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  for (const auto& x : j.at("params")) {
    r.params.push_back({x.at("alpha").get<double>(), x.at("v").get<double>(), x.at("w").get<double>()});
  }
  r.config = config_from_json(j.at("config"));
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  for (const auto& x : j.at("estimates")) {
    r.estimates.push_back({x.at("name").get<std::string>(), number_from(x.at("value")),
                           number_from(x.at("error"))});
  }
  return r;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "id,lhs,rhs,abs_err,rel_err,tol,pass\n";
  for (const Check& c : r.checks) {
    out << c.id << ',' << format_double(c.lhs) << ',' << format_double(c.rhs) << ','
        << format_double(c.abs_err) << ',' << format_double(c.rel_err) << ','
        << format_double(c.tol) << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

bool operator==(const Check& a, const Check& b) {
  return a.id == b.id && same_double(a.lhs, b.lhs) && same_double(a.rhs, b.rhs) &&
         same_double(a.abs_err, b.abs_err) && same_double(a.rel_err, b.rel_err) &&
         same_double(a.tol, b.tol) && a.pass == b.pass && a.error == b.error;
}

bool operator==(const VerificationReport& a, const VerificationReport& b) {
  if (a.params.size() != b.params.size() || a.estimates.size() != b.estimates.size()) return false;
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    const BarnesParams &p = a.params[i], &q = b.params[i];
    if (p.alpha != q.alpha || p.v != q.v || p.w != q.w) return false;
  }
  for (std::size_t i = 0; i < a.estimates.size(); ++i) {
    const NamedEstimate &x = a.estimates[i], &y = b.estimates[i];
    if (x.name != y.name || !same_double(x.value, y.value) || !same_double(x.error, y.error)) {
      return false;
    }
  }
  return a.suite == b.suite && a.checks == b.checks && a.warnings == b.warnings &&
         config_to_json(a.config) == config_to_json(b.config);
}

}  // namespace bzeta
