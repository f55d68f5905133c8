#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bzeta/barnes.hpp"
#include "bzeta/laurent.hpp"

namespace bzeta {

/// One comparison lhs ~ rhs. pass <=> abs_err <= tol or rel_err <= tol.
/// A failed sub-evaluation leaves lhs/rhs NaN, pass false and sets error.
struct Check {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;  // abs_err / |rhs|, or abs_err when rhs == 0
  double tol = 0.0;
  bool pass = false;
  std::optional<std::string> error;
};

/// A reported quantity that is never asserted.
struct NamedEstimate {
  std::string name;
  double value = 0.0;
  double error = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;  // sorted by id
  std::vector<BarnesParams> params;
  EvalConfig config;
  std::vector<std::string> warnings;
  std::vector<NamedEstimate> estimates;

  bool all_pass() const;
  std::size_t failures() const;
  void merge(const VerificationReport& other);
  void sort_checks();
};

Check make_check(std::string id, double lhs, double rhs, double tol);
/// lhs <= rhs as a check: abs_err = max(0, lhs - rhs), tol = 0.
Check make_bound_check(std::string id, double lhs, double rhs);

constexpr double kClosedFormTol = 1e-10;
constexpr double kDerivativeTol = 1e-6;
constexpr double kLimitTol = 1e-4;
constexpr std::uint64_t kDefaultSeed = 20240917;

/// Seed for the random half of the parameter suite: BARNES_ZETA_SEED if set
/// (decimal, ArgumentError if malformed), kDefaultSeed otherwise.
std::uint64_t suite_seed();

/// The five named triples followed by `random_count` triples in (0.1, 5]^3
/// drawn from mt19937_64(seed) with an explicit 53-bit mapping.
std::vector<BarnesParams> default_parameter_suite(std::uint64_t seed, int random_count = 5);

/// Triples with v = w used by the reduction suite.
std::vector<BarnesParams> default_reduction_params();
/// 40 points, sigma in [-0.5, 4], |t| <= 5, away from s = 1, 2.
std::vector<ComplexValue> default_reduction_grid();

/// tol, when given, replaces every per-check default of the suite.
VerificationReport verify_theorem1(const BarnesParams& p, int k_max, std::optional<double> tol,
                                   const EvalConfig& cfg);
VerificationReport verify_theorem2_derivative(const BarnesParams& p, int k_max,
                                              std::optional<double> tol, const EvalConfig& cfg);
VerificationReport verify_theorem2_altsum(const BarnesParams& p, int k_max,
                                          std::optional<double> tol, const EvalConfig& cfg);
VerificationReport verify_reduction(const BarnesParams& p, const std::vector<ComplexValue>& s_grid,
                                    std::optional<double> tol, const EvalConfig& cfg);
VerificationReport verify_bounds(int k_max, const std::vector<double>& a_list,
                                 const EvalConfig& cfg);

/// C(v, w) in
///   gamma_{-1}(1) - gamma_0(1) = -sum_{m,n<=M} 1/u + (1/vw)[U log U - U_v log U_v
///       - U_w log U_w + alpha log alpha] - alpha log(alpha)/(vw) + kappa log M + C + o(1),
/// U_v = alpha + vM, U_w = alpha + wM, U = alpha + vM + wM, kappa = (1/v + 1/w)/2.
/// For each alpha the residual is fitted by C + (c1 + c2 log M)/M + c3/M^2 over
/// M_list. Estimates: C (mean over alpha, error = spread + fit error), C per
/// alpha sample, and kappa refitted freely as a check on the model.
/// Spread > 10x fit error adds a warning.
VerificationReport estimate_C(double v, double w, const std::vector<double>& alphas,
                              const std::vector<int>& M_list, const EvalConfig& cfg);

/// Named suite over a parameter set: theorem1, theorem2, reduction, bounds or all.
VerificationReport run_suite(const std::string& name, const std::vector<BarnesParams>& params,
                             std::optional<double> tol, const EvalConfig& cfg);

nlohmann::json config_to_json(const EvalConfig& cfg);
EvalConfig config_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
/// Header id,lhs,rhs,abs_err,rel_err,tol,pass; numbers as %.17g.
std::string report_to_csv(const VerificationReport& r);
std::string format_double(double x);

bool operator==(const Check& a, const Check& b);
bool operator==(const VerificationReport& a, const VerificationReport& b);

}  // namespace bzeta
