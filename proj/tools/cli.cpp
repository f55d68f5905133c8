#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <regex>

#include "CLI11.hpp"
#include "json.hpp"

#include "bzeta/barnes.hpp"
#include "bzeta/errors.hpp"
#include "bzeta/hurwitz.hpp"
#include "bzeta/laurent.hpp"
#include "bzeta/verify.hpp"

namespace bzeta::cli {

using nlohmann::json;

std::optional<ComplexValue> parse_complex(const std::string& text) {
  static const std::string num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex full("^\\s*([+-]?" + num + ")?(?:([+-])(" + num + ")?i)?\\s*$");
  static const std::regex imag_only("^\\s*([+-]?)(" + num + ")?i\\s*$");
  std::smatch m;
  double re = 0.0, im = 0.0;
  if (std::regex_match(text, m, imag_only)) {
    im = m[2].matched ? std::strtod(m[2].str().c_str(), nullptr) : 1.0;
    if (m[1].str() == "-") im = -im;
  } else if (std::regex_match(text, m, full) && (m[1].matched || m[2].matched)) {
    if (!m[1].matched) return std::nullopt;
    re = std::strtod(m[1].str().c_str(), nullptr);
    if (m[2].matched) {
      im = m[3].matched ? std::strtod(m[3].str().c_str(), nullptr) : 1.0;
      if (m[2].str() == "-") im = -im;
    }
  } else {
    return std::nullopt;
  }
  if (!std::isfinite(re) || !std::isfinite(im)) return std::nullopt;
  return ComplexValue{re, im};
}

std::string format_complex(ComplexValue z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g%c%.17gi", z.real(), std::signbit(z.imag()) ? '-' : '+',
                std::abs(z.imag()));
  return buf;
}

namespace {

struct Knobs {
  double alpha = 1.0, v = 1.0, w = 1.0;
  EvalConfig cfg;
};

void add_params(CLI::App* app, Knobs& k) {
  app->add_option("--alpha", k.alpha, "shift alpha > 0")->capture_default_str();
  app->add_option("--v", k.v, "period v > 0")->capture_default_str();
  app->add_option("--w", k.w, "period w > 0")->capture_default_str();
}

void add_knobs(CLI::App* app, Knobs& k, bool with_M = true) {
  if (with_M) {
    app->add_option("--M", k.cfg.direct_M, "terms summed before the Euler-Maclaurin tail")
        ->capture_default_str();
  }
  app->add_option("--em-order", k.cfg.em_order, "Bernoulli terms in the Euler-Maclaurin tail")
      ->capture_default_str();
  app->add_option("--quad-tol", k.cfg.quad.tail_tol, "sawtooth-integral tail tolerance")
      ->capture_default_str();
  app->add_option("--contour-radius", k.cfg.contour.radius, "contour radius")->capture_default_str();
  app->add_option("--contour-nodes", k.cfg.contour.nodes, "contour nodes (power of two)")
      ->capture_default_str();
  app->add_option("--fd-step", k.cfg.fd_step, "finite-difference step in alpha")->capture_default_str();
}

json complex_json(ComplexValue z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json params_json(const Knobs& k) { return {{"alpha", k.alpha}, {"v", k.v}, {"w", k.w}}; }

json coefficient(int k, double value, double error) {
  return {{"k", k}, {"value", complex_json(value)}, {"est_error", error}};
}

class Command {
public:
  explicit Command(std::string name) : name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}

  json record(const std::vector<std::string>& argv, const Knobs& k) const {
    return {{"schema_version", "1"},
            {"command", name_},
            {"argv", argv},
            {"params", params_json(k)},
            {"config", config_to_json(k.cfg)}};
  }

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

BarnesParams params_of(const Knobs& k) {
  const BarnesParams p{k.alpha, k.v, k.w};
  p.validate();
  k.cfg.validate();
  return p;
}

json laurent_json(const LaurentExpansion& e) {
  json coeffs = json::array();
  coeffs.push_back(coefficient(-1, e.gamma_minus1, e.gamma_minus1_err));
  for (std::size_t k = 0; k < e.gammas.size(); ++k) {
    coeffs.push_back(coefficient(static_cast<int>(k), e.gammas[k], e.errs[k]));
  }
  return coeffs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Barnes double zeta function: evaluation, Laurent coefficients, verification"};
  app.require_subcommand(1);
  Knobs knobs;

  // eval
  std::string s_text, eval_method = "auto";
  bool laurent_fallback = false;
  int direct_terms = 2000;
  CLI::App* eval = app.add_subcommand("eval", "zeta_2(s, alpha; v, w)");
  eval->add_option("--s", s_text, "complex argument, e.g. 0.5+2i")->required();
  eval->add_option("--method", eval_method, "auto | direct | em | integral")
      ->check(CLI::IsMember({"auto", "direct", "em", "integral"}))
      ->capture_default_str();
  eval->add_option("--direct-terms", direct_terms, "square truncation for the direct sum")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  eval->add_flag("--laurent-fallback", laurent_fallback,
                 "at s = 1 or 2, emit the Laurent expansion instead of failing");
  add_params(eval, knobs);
  add_knobs(eval, knobs);

  // laurent
  int pole = 2, kmax = 2, limit_M = 4096;
  std::string laurent_method = "contour";
  bool accelerate = false;
  CLI::App* laurent = app.add_subcommand("laurent", "Laurent coefficients at s = 1 or s = 2");
  laurent->add_option("--pole", pole, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  laurent->add_option("--kmax", kmax, "highest coefficient, <= 12")->check(CLI::Range(0, 12))
      ->capture_default_str();
  laurent->add_option("--method", laurent_method, "contour | limit | integral")
      ->check(CLI::IsMember({"contour", "limit", "integral"}))
      ->capture_default_str();
  laurent->add_option("--M", limit_M,
                      "with --method limit: truncation of the lattice sum (>= 64); "
                      "otherwise: terms before the Euler-Maclaurin tail");
  laurent->add_flag("--accelerate", accelerate, "with --method limit: Richardson over M/2^j");
  add_params(laurent, knobs);
  add_knobs(laurent, knobs, false);

  // special
  std::string what;
  double a = 1.0;
  int special_kmax = 3, order = 0;
  CLI::App* special = app.add_subcommand("special", "Stieltjes constants, log Gamma_2, psi_2");
  special->add_option("--what", what, "stieltjes | gamma2 | polygamma")
      ->required()
      ->check(CLI::IsMember({"stieltjes", "gamma2", "polygamma"}));
  special->add_option("--a", a, "Hurwitz shift for stieltjes")->capture_default_str();
  special->add_option("--kmax", special_kmax, "stieltjes: highest k, <= 16")
      ->check(CLI::Range(0, 16))
      ->capture_default_str();
  special->add_option("--k", order, "polygamma: derivative order 0..4")->check(CLI::Range(0, 4))
      ->capture_default_str();
  add_params(special, knobs);
  add_knobs(special, knobs);

  // verify
  std::string suite = "all", csv_path;
  std::optional<double> tol;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "theorem1 | theorem2 | bounds | reduction | all")
      ->check(CLI::IsMember({"theorem1", "theorem2", "bounds", "reduction", "all"}))
      ->capture_default_str();
  verify->add_option("--tol", tol, "override every check tolerance")->check(CLI::NonNegativeNumber);
  verify->add_option("--csv", csv_path, "also write the checks as CSV to this path");
  add_knobs(verify, knobs);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (eval->parsed()) {
      Command cmd("eval");
      const std::optional<ComplexValue> s = parse_complex(s_text);
      if (!s) throw ArgumentError("cannot parse complex argument: " + s_text);
      const BarnesParams p = params_of(knobs);
      json rec = cmd.record(args, knobs);
      rec["echo"] = {{"s", format_complex(*s)}, {"method", eval_method}};
      const bool at_pole = *s == ComplexValue(1.0) || *s == ComplexValue(2.0);
      if (at_pole) {
        if (!laurent_fallback) throw PoleError("zeta_2 has a pole at s = " + format_complex(*s), *s);
        const LaurentExpansion e = s->real() == 2.0 ? laurent_at_2(p, 2, knobs.cfg) : laurent_at_1(p, 2, knobs.cfg);
        rec["method"] = "laurent";
        rec["coefficients"] = laurent_json(e);
      } else {
        Estimate z;
        std::string used = eval_method;
        if (eval_method == "direct") {
          z = zeta2_direct(*s, p, direct_terms);
        } else if (eval_method == "integral") {
          z = zeta2_integral_rep(*s, p, knobs.cfg);
        } else if (eval_method == "em") {
          z = zeta2_estimate(*s, p, knobs.cfg);
        } else {
          used = "em";
          if (s->real() > 2.5) {
            const Estimate d = zeta2_direct(*s, p, direct_terms);
            if (d.error <= 1e-12) {
              z = d;
              used = "direct";
            }
          }
          if (used == "em") z = zeta2_estimate(*s, p, knobs.cfg);
        }
        rec["method"] = used;
        rec["value"] = complex_json(z.value);
        rec["est_error"] = z.error;
      }
      rec["wall_time_ms"] = cmd.elapsed_ms();
      out << rec.dump(2) << "\n";
      return kOk;
    }

    if (laurent->parsed()) {
      Command cmd("laurent");
      const bool limit = laurent_method == "limit";
      if (!limit && laurent->count("--M") > 0) knobs.cfg.direct_M = limit_M;
      const BarnesParams p = params_of(knobs);
      json rec = cmd.record(args, knobs);
      rec["echo"] = {{"pole", pole}, {"kmax", kmax}, {"method", laurent_method}};
      const double exact = pole == 2 ? 1.0 / (p.v * p.w) : (p.v + p.w - 2.0 * p.alpha) / (2.0 * p.v * p.w);
      rec["principal_part_exact"] = exact;
      rec["principal_part_formula"] = pole == 2 ? "1/(v w)" : "(v + w - 2 alpha)/(2 v w)";
      if (laurent_method == "contour") {
        const LaurentExpansion e = pole == 2 ? laurent_at_2(p, kmax, knobs.cfg) : laurent_at_1(p, kmax, knobs.cfg);
        rec["method"] = "contour";
        rec["coefficients"] = laurent_json(e);
      } else {
        if (pole != 2) throw ArgumentError("--method " + laurent_method + " is only available at --pole 2");
        json coeffs = json::array({coefficient(-1, exact, 0.0)});
        if (limit) {
          if (limit_M < 64) throw ArgumentError("--M must be at least 64 for --method limit");
          std::vector<int> M_list;
          for (int m = limit_M; m >= 16; m /= 2) M_list.push_back(m);
          std::reverse(M_list.begin(), M_list.end());
          const auto g = gammak_at_2_limit_all(p, kmax, M_list, accelerate);
          for (int k = 0; k <= kmax; ++k) coeffs.push_back(coefficient(k, g[k].value, g[k].error));
          rec["method"] = accelerate ? "limit_accelerated" : "limit";
          rec["M"] = M_list.back();
        } else {
          if (kmax != 0) throw ArgumentError("--method integral gives gamma_0 only; use --kmax 0");
          const RealEstimate g = gamma0_at_2_integral(p, knobs.cfg);
          coeffs.push_back(coefficient(0, g.value, g.error));
          rec["method"] = "integral";
        }
        rec["coefficients"] = coeffs;
      }
      rec["wall_time_ms"] = cmd.elapsed_ms();
      out << rec.dump(2) << "\n";
      return kOk;
    }

    if (special->parsed()) {
      Command cmd("special");
      json rec = cmd.record(args, knobs);
      rec["echo"] = {{"what", what}};
      if (what == "stieltjes") {
        if (!(a > 0.0)) throw ArgumentError("--a must be positive");
        knobs.cfg.validate();
        const StieltjesTable t = stieltjes_constants(a, special_kmax, knobs.cfg);
        json coeffs = json::array();
        for (int k = 0; k <= special_kmax; ++k) coeffs.push_back(coefficient(k, t.gammas[k], t.errs[k]));
        rec["echo"]["a"] = a;
        rec["method"] = "contour";
        rec["coefficients"] = coeffs;
      } else {
        const BarnesParams p = params_of(knobs);
        const RealEstimate r = what == "gamma2" ? log_gamma2_estimate(p, knobs.cfg)
                                                : polygamma2_estimate(order, p, knobs.cfg);
        if (what == "polygamma") rec["echo"]["k"] = order;
        rec["method"] = what == "gamma2" || order == 0 ? "contour" : "contour+finite_difference";
        rec["value"] = complex_json(r.value);
        rec["est_error"] = r.error;
      }
      rec["wall_time_ms"] = cmd.elapsed_ms();
      out << rec.dump(2) << "\n";
      return kOk;
    }

    Command cmd("verify");
    knobs.cfg.validate();
    const std::uint64_t seed = suite_seed();
    VerificationReport report = run_suite(suite, default_parameter_suite(seed), tol, knobs.cfg);
    if (suite == "all") {
      const VerificationReport c = estimate_C(1.0, 1.0, {0.5, 1.0, 2.0}, default_limit_M_list(), knobs.cfg);
      report.estimates.insert(report.estimates.end(), c.estimates.begin(), c.estimates.end());
      report.warnings.insert(report.warnings.end(), c.warnings.begin(), c.warnings.end());
    }
    json rec = cmd.record(args, knobs);
    rec.erase("params");
    rec["echo"] = {{"suite", suite}, {"seed", seed}};
    if (tol) rec["echo"]["tol"] = *tol;
    rec["report"] = report_to_json(report);
    if (!csv_path.empty()) {
      std::ofstream file(csv_path);
      if (!file) throw ArgumentError("cannot open --csv path: " + csv_path);
      file << report_to_csv(report);
      if (!file) throw ArgumentError("cannot write --csv path: " + csv_path);
      rec["csv"] = csv_path;
    }
    rec["wall_time_ms"] = cmd.elapsed_ms();
    out << rec.dump(2) << "\n";
    if (!report.all_pass()) {
      err << report.failures() << " of " << report.checks.size() << " checks failed\n";
      return kVerificationFailed;
    }
    return kOk;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << "\n";
    return kPole;
  } catch (const ArgumentError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace bzeta::cli
