/// @file minmod_cli.cpp
/// @brief Command-line front end: exact series and coefficient tables, the
///        derived operator coefficients, verification suites, and the
///        floating-point residual checks.
///
/// Subcommands: forms, chars, derive-ode, verify, numeric, hypergeom.
/// Output formats: json (default), text, and csv (csv is limited to
/// coefficient tables).  Exact rationals are always serialized as strings,
/// never as floats.  Exit codes: 0 on success with all checks passing,
/// 1 when a verification check fails, 2 on usage errors (bad flags, bad
/// values, unsupported format for a subcommand).
///
/// The default truncation is 64 integer q-steps; the environment variable
/// MINMOD_TRUNC overrides the default and an explicit --trunc overrides
/// both.

#include "minmod/characters.hpp"
#include "minmod/hypergeom.hpp"
#include "minmod/modforms.hpp"
#include "minmod/numeric.hpp"
#include "minmod/ode.hpp"
#include "minmod/qseries.hpp"
#include "minmod/rational.hpp"
#include "minmod/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using minmod::ComplexValue;
using minmod::QSeries;
using minmod::Rational;
using json = nlohmann::ordered_json;

struct Config {
  long long trunc = 64;
  double fd_step = 1e-5;
  int rk4_density = 200;
  std::string format = "json";
  std::string out;
};

// ---- small parsing / formatting helpers --------------------------------

double parse_double_strict(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size())
    throw std::invalid_argument("malformed number: '" + s + "'");
  return v;
}

/// Accepts "1.5i", "i", "-i", "2", "0.3+1.1i", "-0.4+0.9i", "1e-2+3i".
ComplexValue parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return ComplexValue(parse_double_strict(s), 0.0);

  s.pop_back();  // drop the trailing 'i'
  // Split before the last +/- that is not a leading sign and not part of
  // an exponent ("e-2"); everything before it is the real part.
  std::size_t split = std::string::npos;
  for (std::size_t p = 1; p < s.size(); ++p) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E')
      split = p;
  }
  std::string re = "0", im = s;
  if (split != std::string::npos) {
    re = s.substr(0, split);
    im = s.substr(split);
  }
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return ComplexValue(parse_double_strict(re), parse_double_strict(im));
}

std::string complex_str(const ComplexValue& z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

json complex_json(const ComplexValue& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json series_fields(const QSeries& f) {
  json coeffs = json::array();
  for (const Rational& c : f.coeffs()) coeffs.push_back(minmod::to_string(c));
  return json{{"offset", minmod::to_string(f.offset())},
              {"step", f.step()},
              {"coeffs", std::move(coeffs)},
              {"trunc", minmod::to_string(f.trusted_below())}};
}

/// CSV coefficient table: one row per nonzero trusted coefficient.
std::string series_csv(const QSeries& f) {
  std::ostringstream os;
  os << "exponent,numerator,denominator\n";
  const auto& cs = f.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    const Rational e =
        Rational(f.offset() + Rational(static_cast<long long>(i), f.step()));
    os << minmod::to_string(e) << ","
       << boost::multiprecision::numerator(cs[i]).str() << ","
       << boost::multiprecision::denominator(cs[i]).str() << "\n";
  }
  return os.str();
}

int emit(const Config& cfg, const std::string& body) {
  if (cfg.out.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream file(cfg.out);
  if (!file)
    throw std::invalid_argument("cannot open output file: " + cfg.out);
  file << body;
  return 0;
}

int emit_json(const Config& cfg, const json& doc) {
  return emit(cfg, doc.dump(2) + "\n");
}

void require_not_csv(const Config& cfg, const std::string& what) {
  if (cfg.format == "csv")
    throw std::invalid_argument("csv output is limited to coefficient "
                                "tables; '" +
                                what + "' supports json and text");
}

// ---- subcommand bodies --------------------------------------------------

int cmd_forms(const Config& cfg, const std::string& name) {
  const minmod::FormName fn = minmod::parse_form_name(name);
  const minmod::FormCatalogEntry entry = minmod::catalog_entry(fn, cfg.trunc);
  if (cfg.format == "csv") return emit(cfg, series_csv(entry.series));
  if (cfg.format == "text") {
    std::ostringstream os;
    os << minmod::form_name_string(fn) << " (weight "
       << minmod::to_string(entry.weight)
       << "): " << minmod::to_string(entry.series) << "\n";
    return emit(cfg, os.str());
  }
  json doc{{"name", minmod::form_name_string(fn)},
           {"weight", minmod::to_string(entry.weight)}};
  doc.update(series_fields(entry.series));
  return emit_json(cfg, doc);
}

int cmd_chars(const Config& cfg, int nu, int s, const std::string& route) {
  const minmod::ModelSpec spec = minmod::ModelSpec::make(nu);
  const QSeries f = route == "sum"
                        ? minmod::character_sum(spec, s, cfg.trunc)
                        : minmod::character_product(spec, s, cfg.trunc);
  if (cfg.format == "csv") return emit(cfg, series_csv(f));
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "nu = " << nu << ", s = " << s << " (" << route
       << " route): " << minmod::to_string(f) << "\n";
    return emit(cfg, os.str());
  }
  json doc{{"nu", nu},
           {"s", s},
           {"kappa", minmod::to_string(spec.kappa(s))},
           {"route", route}};
  doc.update(series_fields(f));
  return emit_json(cfg, doc);
}

int cmd_derive_ode(const Config& cfg, int nu) {
  const minmod::OdeOperator op =
      minmod::derive_alphas(minmod::ModelSpec::make(nu));
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "exponent,numerator,denominator\n";
    for (const auto& [m, alpha] : op.alphas)
      os << m << "," << boost::multiprecision::numerator(alpha).str() << ","
         << boost::multiprecision::denominator(alpha).str() << "\n";
    if (op.alpha_cusp)
      os << "cusp," << boost::multiprecision::numerator(*op.alpha_cusp).str()
         << "," << boost::multiprecision::denominator(*op.alpha_cusp).str()
         << "\n";
    return emit(cfg, os.str());
  }
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "nu = " << nu << ", order M = " << op.M << "\n";
    for (const auto& [m, alpha] : op.alphas)
      os << "alpha_" << m << " = " << minmod::to_string(alpha) << "\n";
    if (op.alpha_cusp)
      os << "alpha_cusp = " << minmod::to_string(*op.alpha_cusp) << "\n";
    return emit(cfg, os.str());
  }
  json alphas = json::object();
  for (const auto& [m, alpha] : op.alphas)
    alphas[std::to_string(m)] = minmod::to_string(alpha);
  json doc{{"nu", nu}, {"M", op.M}, {"alphas", std::move(alphas)}};
  if (op.alpha_cusp)
    doc["alpha_cusp"] = minmod::to_string(*op.alpha_cusp);
  return emit_json(cfg, doc);
}

json report_json(const minmod::VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json entry{{"id", c.id},
               {"ref", c.ref},
               {"status", c.status == minmod::CheckStatus::Pass ? "pass"
                                                                : "fail"}};
    if (c.residual) entry["residual"] = *c.residual;
    entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return json{{"suite", r.suite},
              {"wall_time", r.wall_time},
              {"checks", std::move(checks)}};
}

int cmd_verify(const Config& cfg, const std::string& suite, int jobs) {
  require_not_csv(cfg, "verify");
  const minmod::VerifyOptions options{cfg.trunc, cfg.fd_step,
                                      cfg.rk4_density};
  std::vector<minmod::VerificationReport> reports;
  if (suite == "all") {
    if (options.truncation < 16)
      throw std::invalid_argument(
          "the ode and characters suites need truncation >= 16");
    reports = minmod::run_all(options, jobs);
  } else {
    reports.push_back(minmod::run_suite(suite, options));
  }

  bool all_passed = true;
  int checks = 0, failures = 0;
  for (const auto& r : reports) {
    all_passed = all_passed && r.passed();
    checks += static_cast<int>(r.checks.size());
    failures += r.failures();
  }

  if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << "suite " << r.suite << " (" << r.checks.size() << " checks, "
         << r.wall_time << " s)\n";
      for (const auto& c : r.checks) {
        os << "  [" << (c.status == minmod::CheckStatus::Pass ? "PASS"
                                                              : "FAIL")
           << "] " << c.id;
        if (c.residual) os << " (residual " << *c.residual << ")";
        os << " -- " << c.detail << "\n";
      }
    }
    os << (all_passed ? "PASSED" : "FAILED") << ": " << checks
       << " checks, " << failures << " failures\n";
    emit(cfg, os.str());
  } else {
    json doc = json::object();
    json list = json::array();
    for (const auto& r : reports) list.push_back(report_json(r));
    doc["reports"] = std::move(list);
    doc["passed"] = all_passed;
    emit_json(cfg, doc);
  }
  return all_passed ? 0 : 1;
}

int cmd_numeric_eval(const Config& cfg, const std::string& name,
                     const std::string& tau_text) {
  require_not_csv(cfg, "numeric eval");
  const ComplexValue tau = parse_complex(tau_text);
  const ComplexValue value = minmod::eval_form(name, tau);
  if (cfg.format == "text") {
    std::ostringstream os;
    os << name << "(" << complex_str(tau) << ") = " << complex_str(value)
       << "\n";
    return emit(cfg, os.str());
  }
  return emit_json(cfg, json{{"name", name},
                             {"tau", complex_str(tau)},
                             {"value", complex_json(value)}});
}

int cmd_numeric_omega(const Config& cfg, const std::string& tau_text) {
  require_not_csv(cfg, "numeric omega-check");
  const ComplexValue tau = parse_complex(tau_text);
  const minmod::OmegaCheck r = minmod::check_omega_lemma(tau, cfg.fd_step);
  const bool ok = r.tau_residual < 1e-6 && r.lambda_residual < 1e-9;
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "tau = " << complex_str(tau) << ", h = " << cfg.fd_step << "\n"
       << "tau_residual = " << r.tau_residual << "\n"
       << "lambda_residual = " << r.lambda_residual << "\n"
       << (ok ? "PASSED" : "FAILED") << "\n";
    emit(cfg, os.str());
  } else {
    emit_json(cfg, json{{"tau", complex_str(tau)},
                        {"h", cfg.fd_step},
                        {"tau_residual", r.tau_residual},
                        {"lambda_residual", r.lambda_residual},
                        {"passed", ok}});
  }
  return ok ? 0 : 1;
}

int cmd_numeric_dtau(const Config& cfg, const std::string& tau_text) {
  require_not_csv(cfg, "numeric dtau-check");
  const ComplexValue tau = parse_complex(tau_text);
  const double fd = minmod::check_dtau_lemma(tau, cfg.fd_step);
  const double chain = minmod::check_dtau_chain_rule(tau);
  const bool ok = fd < 1e-6 && chain < 1e-9;
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "tau = " << complex_str(tau) << ", h = " << cfg.fd_step << "\n"
       << "fd_residual = " << fd << "\n"
       << "chain_residual = " << chain << "\n"
       << (ok ? "PASSED" : "FAILED") << "\n";
    emit(cfg, os.str());
  } else {
    emit_json(cfg, json{{"tau", complex_str(tau)},
                        {"h", cfg.fd_step},
                        {"fd_residual", fd},
                        {"chain_residual", chain},
                        {"passed", ok}});
  }
  return ok ? 0 : 1;
}

int cmd_numeric_integrate(const Config& cfg, const std::string& from_text,
                          const std::string& to_text, int s,
                          const std::string& lambda_text) {
  require_not_csv(cfg, "numeric integrate");
  const ComplexValue tau0 = parse_complex(from_text);
  const ComplexValue tau1 = parse_complex(to_text);
  const ComplexValue lambda = parse_complex(lambda_text);

  const minmod::CalibratedState seed =
      minmod::closed_form_state(tau0, lambda, s);
  const minmod::IntegrationResult run = minmod::integrate_variation_system(
      tau0, tau1, lambda, seed.state, cfg.rk4_density);
  const minmod::VariationState want =
      minmod::closed_form_state(tau1, lambda, s).state;
  const double err_one =
      std::abs(run.state.one - want.one) / std::abs(want.one);
  const double err_a1 = std::abs(run.state.a1 - want.a1) / std::abs(want.a1);
  const bool ok = err_one < 1e-6 && err_a1 < 1e-6;

  if (cfg.format == "text") {
    std::ostringstream os;
    os << "transport " << complex_str(tau0) << " -> " << complex_str(tau1)
       << ", sector " << s << ", lambda = " << complex_str(lambda) << "\n"
       << "calibrated_at_start = " << (seed.calibrated_at_start ? "true"
                                                                : "false")
       << "\n"
       << "steps = " << run.steps << "\n"
       << "one = " << complex_str(run.state.one) << "\n"
       << "a1 = " << complex_str(run.state.a1) << "\n"
       << "rel_error_one = " << err_one << "\n"
       << "rel_error_a1 = " << err_a1 << "\n"
       << (ok ? "PASSED" : "FAILED") << "\n";
    emit(cfg, os.str());
  } else {
    emit_json(cfg,
              json{{"from", complex_str(tau0)},
                   {"to", complex_str(tau1)},
                   {"s", s},
                   {"lambda", complex_str(lambda)},
                   {"calibrated_at_start", seed.calibrated_at_start},
                   {"steps", run.steps},
                   {"state", json{{"one", complex_json(run.state.one)},
                                  {"a1", complex_json(run.state.a1)}}},
                   {"closed_form", json{{"one", complex_json(want.one)},
                                        {"a1", complex_json(want.a1)}}},
                   {"rel_error_one", err_one},
                   {"rel_error_a1", err_a1},
                   {"passed", ok}});
  }
  return ok ? 0 : 1;
}

int cmd_numeric_smatrix(const Config& cfg) {
  require_not_csv(cfg, "numeric smatrix");
  const auto S = minmod::smatrix();
  const double residual = minmod::check_smatrix();
  const bool ok = residual < 1e-7;
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "S = [[" << S[0][0] << ", " << S[0][1] << "], [" << S[1][0]
       << ", " << S[1][1] << "]]\n"
       << "residual = " << residual << "\n"
       << (ok ? "PASSED" : "FAILED") << "\n";
    emit(cfg, os.str());
  } else {
    emit_json(cfg, json{{"matrix",
                         json::array({json::array({S[0][0], S[0][1]}),
                                      json::array({S[1][0], S[1][1]})})},
                        {"residual", residual},
                        {"passed", ok}});
  }
  return ok ? 0 : 1;
}

int cmd_hypergeom(const Config& cfg, const std::string& k_text) {
  const Rational k = minmod::parse_rational(k_text);
  const minmod::HypergeomParams p = minmod::params_for_k(k);
  const minmod::SeriesSolution first = minmod::f21_series(p, cfg.trunc);
  const minmod::SeriesSolution second =
      minmod::second_solution(p, cfg.trunc);
  const bool ok = minmod::solution_satisfies_ode(p, first) &&
                  minmod::solution_satisfies_ode(p, second);

  if (cfg.format == "csv") {
    // Coefficient table of the exponent-0 solution.
    std::ostringstream os;
    os << "exponent,numerator,denominator\n";
    for (std::size_t i = 0; i < first.coefficients.size(); ++i)
      os << i << ","
         << boost::multiprecision::numerator(first.coefficients[i]).str()
         << ","
         << boost::multiprecision::denominator(first.coefficients[i]).str()
         << "\n";
    emit(cfg, os.str());
    return ok ? 0 : 1;
  }
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "k = " << minmod::to_string(p.k) << ": A = "
       << minmod::to_string(p.A) << ", B = " << minmod::to_string(p.B)
       << ", C = " << minmod::to_string(p.C) << "\n"
       << "gauge exponent = " << minmod::to_string(minmod::gauge_exponent(k))
       << "\n"
       << "local exponents at 0: 0, "
       << minmod::to_string(Rational(Rational(1) - p.C)) << "\n"
       << "substitution residual vanishes: " << (ok ? "yes" : "no") << "\n";
    emit(cfg, os.str());
    return ok ? 0 : 1;
  }

  auto solution_json = [](const minmod::SeriesSolution& s) {
    json coeffs = json::array();
    for (const Rational& c : s.coefficients)
      coeffs.push_back(minmod::to_string(c));
    return json{{"exponent_at_0", minmod::to_string(s.exponent_at_0)},
                {"coefficients", std::move(coeffs)}};
  };
  emit_json(cfg,
            json{{"k", minmod::to_string(p.k)},
                 {"A", minmod::to_string(p.A)},
                 {"B", minmod::to_string(p.B)},
                 {"C", minmod::to_string(p.C)},
                 {"gauge_exponent",
                  minmod::to_string(minmod::gauge_exponent(k))},
                 {"solutions", json::array({solution_json(first),
                                            solution_json(second)})},
                 {"satisfies_ode", ok}});
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{
      "minmod: exact characters of the (2, nu) family, their modular "
      "differential operator, and the verification suites"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--trunc", cfg.trunc,
                 "trusted q-window in integer steps (default 64)")
      ->envname("MINMOD_TRUNC")
      ->check(CLI::PositiveNumber);
  app.add_option("--fd-step", cfg.fd_step,
                 "finite-difference step for the numeric checks");
  app.add_option("--rk4-density", cfg.rk4_density,
                 "RK4 steps per unit of path arclength");
  app.add_option("--out", cfg.out, "write output to a file instead of stdout");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag_callback(
      "--json", [&cfg] { cfg.format = "json"; },
      "shorthand for --format json");

  // forms
  std::string form_name;
  auto* forms = app.add_subcommand("forms", "print a catalog series");
  forms->fallthrough();
  forms->add_option("--name", form_name, "E2|E4|E6|E12|Delta|Eta|Theta51|Theta52|J|RCF")
      ->required();

  // chars
  int chars_nu = 5, chars_s = 1;
  std::string chars_route = "product";
  auto* chars = app.add_subcommand("chars", "print a character series");
  chars->fallthrough();
  chars->add_option("--nu", chars_nu, "odd modulus >= 3")->required();
  chars->add_option("--s", chars_s, "sector index, 1 = vacuum")->required();
  chars->add_option("--route", chars_route, "series construction")
      ->check(CLI::IsMember({"product", "sum"}));

  // derive-ode
  int ode_nu = 5;
  auto* dode = app.add_subcommand(
      "derive-ode", "derive the operator coefficient table");
  dode->fallthrough();
  dode->add_option("--nu", ode_nu, "odd modulus, 3 <= nu <= 13")->required();

  // verify
  std::string verify_suite = "all";
  int verify_jobs = 0;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->fallthrough();
  verify->add_option("--suite", verify_suite,
                     "all or one of: qseries, modforms, characters, ode, "
                     "symident, numeric, hypergeom");
  verify->add_option("--jobs", verify_jobs,
                     "worker threads for --suite all (0 = auto)");

  // numeric
  auto* numeric = app.add_subcommand("numeric", "floating-point checks");
  numeric->fallthrough();
  numeric->require_subcommand(1);

  std::string eval_name = "E4", eval_tau = "i";
  auto* neval = numeric->add_subcommand("eval", "evaluate a catalog form");
  neval->fallthrough();
  neval->add_option("--name", eval_name,
                    "E2|E4|E6|E12|Delta|eta|j|chi1|chi2");
  neval->add_option("--tau", eval_tau, "point in the upper half plane");

  std::string omega_tau = "1.2i";
  auto* nomega = numeric->add_subcommand(
      "omega-check", "connection-form residuals at one point");
  nomega->fallthrough();
  nomega->add_option("--tau", omega_tau, "point in the upper half plane");

  std::string dtau_tau = "1.2i";
  auto* ndtau = numeric->add_subcommand(
      "dtau-check", "pullback-identity residuals at one point");
  ndtau->fallthrough();
  ndtau->add_option("--tau", dtau_tau, "point in the upper half plane");

  std::string int_from = "1.5i", int_to = "0.9i", int_lambda = "1";
  int int_s = 1;
  auto* nint = numeric->add_subcommand(
      "integrate", "RK4 transport against the closed form");
  nint->fallthrough();
  nint->add_option("--from", int_from, "start point")->required();
  nint->add_option("--to", int_to, "end point")->required();
  nint->add_option("--s", int_s, "sector index")->required();
  nint->add_option("--lambda", int_lambda, "scale parameter (nonzero)");

  auto* nsmat = numeric->add_subcommand(
      "smatrix", "transformation-matrix residual");
  nsmat->fallthrough();

  // hypergeom
  std::string hyp_k = "-7/10";
  auto* hyp = app.add_subcommand(
      "hypergeom", "series solutions for an admissible gauge shift");
  hyp->fallthrough();
  hyp->add_option("--k", hyp_k, "gauge shift, -7/10 or -11/10")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*forms) return cmd_forms(cfg, form_name);
    if (*chars) return cmd_chars(cfg, chars_nu, chars_s, chars_route);
    if (*dode) return cmd_derive_ode(cfg, ode_nu);
    if (*verify) return cmd_verify(cfg, verify_suite, verify_jobs);
    if (*numeric) {
      if (*neval) return cmd_numeric_eval(cfg, eval_name, eval_tau);
      if (*nomega) return cmd_numeric_omega(cfg, omega_tau);
      if (*ndtau) return cmd_numeric_dtau(cfg, dtau_tau);
      if (*nint)
        return cmd_numeric_integrate(cfg, int_from, int_to, int_s,
                                     int_lambda);
      if (*nsmat) return cmd_numeric_smatrix(cfg);
    }
    if (*hyp) return cmd_hypergeom(cfg, hyp_k);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
