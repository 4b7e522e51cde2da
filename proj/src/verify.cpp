#include "minmod/verify.hpp"

#include "minmod/characters.hpp"
#include "minmod/hypergeom.hpp"
#include "minmod/modforms.hpp"
#include "minmod/numeric.hpp"
#include "minmod/ode.hpp"
#include "minmod/qseries.hpp"
#include "minmod/symident.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <thread>
#include <utility>

namespace minmod {

namespace {

// ---- report assembly ---------------------------------------------------

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string suite)
      : start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(suite);
  }

  /// Exact check: pass iff body() returns true; no residual recorded.
  void exact(const std::string& id, const std::string& ref,
             const std::string& detail, const std::function<bool()>& body) {
    CheckResult r;
    r.id = id;
    r.ref = ref;
    r.detail = detail;
    try {
      r.status = body() ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.detail = detail + " [exception: " + e.what() + "]";
    }
    report_.checks.push_back(std::move(r));
  }

  /// Residual check: pass iff the returned residual is finite and < tol.
  void residual(const std::string& id, const std::string& ref,
                const std::string& detail, double tol,
                const std::function<double()>& body) {
    CheckResult r;
    r.id = id;
    r.ref = ref;
    r.detail = detail;
    try {
      const double value = body();
      r.residual = value;
      r.status = (std::isfinite(value) && value < tol) ? CheckStatus::Pass
                                                       : CheckStatus::Fail;
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.detail = detail + " [exception: " + e.what() + "]";
    }
    report_.checks.push_back(std::move(r));
  }

  VerificationReport finish() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    report_.wall_time =
        std::chrono::duration_cast<std::chrono::duration<double>>(elapsed)
            .count();
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  std::chrono::steady_clock::time_point start_;
};

Rational ppow(long long base, int e) { return rational_pow(rat(base), e); }

// The coefficient table of the order-M operator, in factorized form.
std::map<int, Rational> expected_alphas(int nu) {
  switch (nu) {
    case 3:
      return {};
    case 5:
      return {{0, Rational(-rat(11) / ppow(60, 2))}};
    case 7:
      return {{1, Rational(-rat(5 * 7) / ppow(42, 2))},
              {0, Rational(rat(5 * 17) / ppow(42, 3))}};
    case 9:
      return {{2, Rational(-rat(2 * 3 * 13) / ppow(36, 2))},
              {1, Rational(rat(8 * 53) / ppow(36, 3))},
              {0, Rational(-rat(3 * 11 * 23) / ppow(36, 4))}};
    case 11:
      return {
          {3, Rational(-rat(11 * 53) / Rational(ppow(2, 2) * ppow(33, 2)))},
          {2, Rational(rat(3 * 5 * 11 * 59) /
                       Rational(ppow(2, 3) * ppow(33, 3)))},
          {1, Rational(-rat(11 * 6151) / Rational(ppow(2, 4) * ppow(33, 4)))},
          {0, Rational(rat(16 * 17 * 29) / ppow(33, 5))}};
    case 13:
      return {{4, Rational(-rat(7 * 13 * 67) / ppow(156, 2))},
              {3, Rational(rat(8 * 13 * 17 * 193) / ppow(156, 3))},
              {2, Rational(-rat(5LL * 11 * 13 * 89 * 127) / ppow(156, 4))},
              {1, Rational(rat(8LL * 3 * 5 * 13 * 31 * 2437) / ppow(156, 5))},
              {0, Rational(-Rational(ppow(5, 4) * ppow(7, 2) *
                                     rat(23 * 31 * 67)) /
                           ppow(156, 6))}};
    default:
      throw std::invalid_argument("no pinned table for nu = " +
                                  std::to_string(nu));
  }
}

Rational expected_cusp_13() {
  return Rational(Rational(ppow(5, 2) * rat(7 * 11) * ppow(23, 2) * rat(167)) /
                  Rational(ppow(2, 5) * ppow(3, 2) * ppow(13, 4) * rat(691)));
}

std::string nu_id(const char* stem, int nu) {
  return std::string(stem) + ".nu" + std::to_string(nu);
}

// Sample points for the finite-difference lemmas, Im tau in [0.8, 1.5].
const std::array<ComplexValue, 5> kLemmaPoints = {
    ComplexValue(0.0, 0.8), ComplexValue(0.0, 1.1), ComplexValue(0.0, 1.5),
    ComplexValue(0.3, 1.1), ComplexValue(-0.4, 0.9)};

// ---- suites ------------------------------------------------------------

VerificationReport suite_qseries(const VerifyOptions& opt) {
  SuiteBuilder b("qseries");
  const long long n = std::max<long long>(opt.truncation, 8);

  b.exact("qseries.ring.laws", "ring:axioms",
          "distributivity and associativity on fractional-offset series",
          [n] {
            const QSeries f = shift(eisenstein(4, n), rat(1, 3));
            const QSeries g = shift(eta(n), rat(-1, 2));
            const QSeries h = delta(n);
            return agree(mul(add(f, g), h), add(mul(f, h), mul(g, h))) &&
                   agree(mul(mul(f, g), h), mul(f, mul(g, h)));
          });

  b.exact("qseries.window.mul", "window:product",
          "trusted window of a product follows the min rule", [n] {
            const QSeries f = truncate(eisenstein(4, n), Rational(5));
            const QSeries g = shift(eisenstein(6, n), rat(1, 2));
            const QSeries p = mul(f, g);
            // min(low_f + T_g, low_g + T_f) = min(1/2 + 5, 0 + n + 1/2).
            const Rational want =
                std::min(Rational(rat(1, 2) + 5), Rational(rat(1, 2) + n));
            return p.trusted_below() == want;
          });

  b.exact("qseries.invert.roundtrip", "field:inverse",
          "f * invert(f) is the constant 1 within the window", [n] {
            const QSeries f = eisenstein(6, n);
            const QSeries one =
                QSeries::from_coeffs(0, 1, {Rational(1)}, Rational(n));
            return agree(mul(f, invert(f)), one);
          });

  b.exact("qseries.pow.fractional", "power:rational",
          "pow_rational(f, 1/2) squares back to f", [n] {
            const QSeries f = eisenstein(4, n);
            return agree(pow_int(pow_rational(f, rat(1, 2)), 2), f);
          });

  b.exact("qseries.derive.leibniz", "derivation:leibniz",
          "q d/dq satisfies the product rule", [n] {
            const QSeries f = eta(n);
            const QSeries g = eisenstein(2, n);
            return agree(derive_q(mul(f, g)),
                         add(mul(derive_q(f), g), mul(f, derive_q(g))));
          });

  return b.finish();
}

VerificationReport suite_modforms(const VerifyOptions& opt) {
  SuiteBuilder b("modforms");
  const long long n = std::max<long long>(opt.truncation, 8);

  b.exact("modforms.serre.e4", "serre:E4",
          "the weight-4 covariant derivative sends E4 to -E6/3", [n] {
            return agree(serre(eisenstein(4, n), Rational(4)),
                         scale(rat(-1, 3), eisenstein(6, n)));
          });

  b.exact("modforms.serre.e6", "serre:E6",
          "the weight-6 covariant derivative sends E6 to -E4^2/2", [n] {
            return agree(serre(eisenstein(6, n), Rational(6)),
                         scale(rat(-1, 2), pow_int(eisenstein(4, n), 2)));
          });

  b.exact("modforms.e12.basis", "basis:weight12",
          "691 E12 = 441 E4^3 + 250 E6^2", [n] {
            return agree(scale(rat(691), eisenstein(12, n)),
                         add(scale(rat(441), pow_int(eisenstein(4, n), 3)),
                             scale(rat(250), pow_int(eisenstein(6, n), 2))));
          });

  b.exact("modforms.discriminant", "discriminant:1728",
          "E4^3 - E6^2 = 1728 Delta", [n] {
            return agree(sub(pow_int(eisenstein(4, n), 3),
                             pow_int(eisenstein(6, n), 2)),
                         scale(rat(1728), delta(n)));
          });

  b.exact("modforms.icosahedral", "icosahedral:degree60",
          "(X^4-228X^3+494X^2+228X+1)^3 + jX(X^2+11X-1)^5 = 0 through 40 "
          "steps for X = rcf^5",
          [] {
            const long long t = 40;
            const QSeries x = pow_int(rcf(t + 3), 5);
            const QSeries j = jfunction(t + 3);
            const QSeries one =
                QSeries::from_coeffs(0, 1, {Rational(1)}, Rational(t + 3));
            const QSeries p1 =
                add(sub(add(sub(pow_int(x, 4), scale(rat(228), pow_int(x, 3))),
                            scale(rat(494), pow_int(x, 2))),
                        scale(rat(-228), x)),
                    one);
            const QSeries p2 =
                sub(add(pow_int(x, 2), scale(rat(11), x)), one);
            const QSeries res =
                add(pow_int(p1, 3), mul(mul(j, x), pow_int(p2, 5)));
            return is_zero_below(res, Rational(t));
          });

  return b.finish();
}

VerificationReport suite_characters(const VerifyOptions& opt) {
  SuiteBuilder b("characters");
  const long long n = opt.truncation;

  for (int nu = 3; nu <= 13; nu += 2) {
    const ModelSpec spec = ModelSpec::make(nu);
    b.exact(nu_id("characters.sumprod", nu), "andrews-gordon:sum-product",
            "fermionic sum equals the infinite product for all " +
                std::to_string(spec.M()) + " sectors through " +
                std::to_string(n) + " steps",
            [spec, n] {
              for (int s = 1; s <= spec.M(); ++s) {
                if (!agree(character_sum(spec, s, n),
                           character_product(spec, s, n)))
                  return false;
              }
              return true;
            });
  }

  b.exact("characters.head.nu5", "vacuum:head",
          "first seven printed coefficients of both nu=5 series", [] {
            const ModelSpec spec = ModelSpec::make(5);
            const QSeries v = character_product(spec, 1, 8);
            const QSeries w = character_product(spec, 2, 8);
            const long long want_v[] = {1, 0, 1, 1, 1, 1, 2};
            const long long want_w[] = {1, 1, 1, 1, 2, 2, 3};
            for (int i = 0; i < 7; ++i) {
              if (v.coeff(Rational(spec.kappa(1) + i)) != rat(want_v[i]))
                return false;
              if (w.coeff(Rational(spec.kappa(2) + i)) != rat(want_w[i]))
                return false;
            }
            return true;
          });

  b.exact("characters.theta.quotient", "theta:quotient",
          "theta5(2)/eta and theta5(1)/eta are the two nu=5 characters",
          [n] {
            const ModelSpec spec = ModelSpec::make(5);
            const QSeries et = eta(n + 2);
            return agree(mul(theta5(2, n + 2), invert(et)),
                         character_product(spec, 1, n)) &&
                   agree(mul(theta5(1, n + 2), invert(et)),
                         character_product(spec, 2, n));
          });

  b.exact("characters.rcf.ratio", "rcf:ratio",
          "the character ratio chi1/chi2 is the continued-fraction product",
          [n] {
            const ModelSpec spec = ModelSpec::make(5);
            const QSeries ratio =
                mul(character_product(spec, 1, n),
                    invert(character_product(spec, 2, n)));
            return agree(ratio, rcf(n));
          });

  return b.finish();
}

VerificationReport suite_ode(const VerifyOptions& opt) {
  SuiteBuilder b("ode");
  const long long n = opt.truncation;

  for (int nu = 3; nu <= 13; nu += 2) {
    const ModelSpec spec = ModelSpec::make(nu);
    b.exact(nu_id("ode.table", nu), "indicial:table",
            "derived coefficient list matches the pinned exact table",
            [spec] {
              const OdeOperator op = derive_alphas(spec);
              if (op.M != spec.M()) return false;
              if (op.alphas != expected_alphas(spec.nu)) return false;
              if (spec.nu == 13)
                return op.alpha_cusp.has_value() &&
                       Rational(*op.alpha_cusp) == expected_cusp_13();
              return !op.alpha_cusp.has_value();
            });
  }

  for (int nu = 3; nu <= 13; nu += 2) {
    const ModelSpec spec = ModelSpec::make(nu);
    b.exact(nu_id("ode.kernel", nu), "kernel:annihilation",
            "operator annihilates every sector through " +
                std::to_string(n) + " steps",
            [spec, n] {
              const OdeOperator op = derive_alphas(spec);
              for (int s = 1; s <= spec.M(); ++s) {
                const QSeries f =
                    character_product(spec, s, n + spec.M() + 2);
                if (!is_zero_below(apply(op, f),
                                   Rational(spec.kappa(s) + n)))
                  return false;
              }
              return true;
            });
  }

  b.exact("ode.second-order.nu5", "serre-tower:order2",
          "direct composition route agrees with the generic operator",
          [n] { return second_order_check_25(n); });

  b.exact("ode.wronskian.nu5", "wronskian:ratios",
          "bordered-Wronskian minors reproduce the operator coefficients",
          [n] {
            const ModelSpec spec = ModelSpec::make(5);
            std::vector<QSeries> sols;
            for (int s = 1; s <= 2; ++s)
              sols.push_back(character_product(spec, s, n));
            const std::vector<QSeries> w = wronskian_ode(sols);
            const QSeries e4 = eisenstein(4, n);
            // w1 = 0 and w0/w2 = -(11/3600) E4.
            return is_zero_below(w[1], w[1].trusted_below()) &&
                   agree(w[0], mul(scale(rat(-11, 3600), e4), w[2]));
          });

  b.exact("ode.boundary", "boundary:exponents",
          "colliding-branch exponents are (-1/30, 11/30)", [] {
            const auto [lo, hi] = boundary_exponents_25();
            if (lo != rat(-1, 30) || hi != rat(11, 30)) return false;
            for (const Rational& a : {lo, hi}) {
              if (Rational(a * a - a / 3 - rat(11, 900)) != rat(0))
                return false;
            }
            return true;
          });

  return b.finish();
}

VerificationReport suite_symident(const VerifyOptions&) {
  SuiteBuilder b("symident");
  b.exact("symident.detv", "detV:product",
          "Vandermonde determinant factorization", verify_detV_product);
  b.exact("symident.xi-quotients", "xi:quotients",
          "weighted-sum formulas for the two ratio determinants",
          verify_xi_quotients);
  b.exact("symident.xi1-pairing", "pairing:xi1",
          "det Xi1 det V = 2 a^2 da + 9 b db on the constraint locus",
          verify_det_xi1_pairing);
  b.exact("symident.xi0-pairing", "pairing:xi0",
          "det Xi0 det V = 9 b da - 6 a db on the constraint locus",
          verify_det_xi0_pairing);
  b.exact("symident.deformation", "deformation:calculus",
          "derivation structure of a, b, det V, delta0",
          verify_deformation_calculus);
  b.exact("symident.theta-cyclic", "theta:cyclic",
          "cyclically symmetrized theta-weighted sum identity",
          verify_theta_cyclic_identity);
  b.exact("symident.csing", "csing:collapse",
          "second-order reduction collapses to (22/75) a <1>",
          verify_csing_simplification);
  b.exact("symident.equivalence", "system:equivalence",
          "reduction steps tying the two first-order systems together",
          verify_system_equivalence);
  return b.finish();
}

VerificationReport suite_numeric(const VerifyOptions& opt) {
  SuiteBuilder b("numeric");
  const double h = opt.fd_step;

  b.residual("numeric.omega.tau", "omega:fd",
             "connection-form residual at five sample points", 1e-6, [h] {
               double worst = 0.0;
               for (const ComplexValue& tau : kLemmaPoints)
                 worst = std::max(worst,
                                  check_omega_lemma(tau, h).tau_residual);
               return worst;
             });

  b.residual("numeric.omega.lambda", "omega:scale",
             "scale-direction residual of the connection form", 1e-9, [h] {
               double worst = 0.0;
               for (const ComplexValue& tau : kLemmaPoints)
                 worst = std::max(worst,
                                  check_omega_lemma(tau, h).lambda_residual);
               return worst;
             });

  b.exact("numeric.omega.order", "omega:order",
          "central-difference residual scales as O(h^2)", [] {
            const double big =
                check_omega_lemma(ComplexValue(0.0, 1.2), 1e-3).tau_residual;
            const double small =
                check_omega_lemma(ComplexValue(0.0, 1.2), 5e-4).tau_residual;
            const double ratio = big / small;
            return ratio > 3.0 && ratio < 5.0;
          });

  b.residual("numeric.dtau.fd", "dtau:fd",
             "pullback identity residual at five sample points", 1e-6, [h] {
               double worst = 0.0;
               for (const ComplexValue& tau : kLemmaPoints)
                 worst = std::max(worst, check_dtau_lemma(tau, h));
               return worst;
             });

  b.residual("numeric.dtau.chain", "dtau:chain",
             "fully analytic chain-rule route", 1e-12, [] {
               double worst = 0.0;
               for (const ComplexValue& tau : kLemmaPoints)
                 worst = std::max(worst, check_dtau_chain_rule(tau));
               return worst;
             });

  b.residual("numeric.transport", "transport:rk4",
             "RK4 endpoint matches the closed form for both sectors", 1e-6,
             [&opt] {
               const ComplexValue tau0(0.0, 1.5), tau1(0.0, 0.9);
               const ComplexValue lambda(1.0, 0.0);
               double worst = 0.0;
               for (int s : {1, 2}) {
                 const VariationState init =
                     closed_form_state(tau0, lambda, s).state;
                 const VariationState got =
                     integrate_variation_system(tau0, tau1, lambda, init,
                                                opt.rk4_density)
                         .state;
                 const VariationState want =
                     closed_form_state(tau1, lambda, s).state;
                 worst = std::max(
                     worst, std::abs(got.one - want.one) / std::abs(want.one));
                 worst = std::max(
                     worst, std::abs(got.a1 - want.a1) / std::abs(want.a1));
               }
               return worst;
             });

  b.residual("numeric.smatrix", "smatrix:residual",
             "transformation matrix reproduces the dual characters", 1e-7,
             [] { return check_smatrix(); });

  b.residual("numeric.smatrix.invariance", "smatrix:invariance",
             "|chi1|^2 + |chi2|^2 is invariant under the inversion", 1e-7,
             [] {
               double worst = 0.0;
               for (const double t : {0.8, 1.0, 1.25}) {
                 const ComplexValue tau(0.0, t), dual(0.0, 1.0 / t);
                 const double at_tau = std::norm(eval_form("chi1", tau)) +
                                       std::norm(eval_form("chi2", tau));
                 const double at_dual = std::norm(eval_form("chi1", dual)) +
                                        std::norm(eval_form("chi2", dual));
                 worst =
                     std::max(worst, std::abs(at_tau - at_dual) / at_tau);
               }
               return worst;
             });

  b.residual("numeric.special.e4i", "special:E4(i)",
             "E4 at the square lattice point against the Gamma value", 1e-8,
             [] {
               const double exact =
                   3.0 * std::pow(std::tgamma(0.25), 8) /
                   std::pow(2.0 * 3.14159265358979323846, 6);
               const ComplexValue got = eval_form("E4", ComplexValue(0, 1));
               return std::abs(got - ComplexValue(exact)) / exact;
             });

  return b.finish();
}

VerificationReport suite_hypergeom(const VerifyOptions&) {
  SuiteBuilder b("hypergeom");

  b.exact("hypergeom.allowed-k", "gauge:quadratic",
          "the cancellation quadratic has roots -7/10 and -11/10", [] {
            const auto [k1, k2] = allowed_k();
            return k1 == rat(-7, 10) && k2 == rat(-11, 10) &&
                   double_pole_obstruction(k1) == rat(0) &&
                   double_pole_obstruction(k2) == rat(0);
          });

  b.exact("hypergeom.params", "gauge:parameters",
          "derived (A,B;C) triples match the pinned tables", [] {
            const HypergeomParams p = params_for_k(rat(-7, 10));
            const HypergeomParams q = params_for_k(rat(-11, 10));
            return p.A == rat(3, 10) && p.B == rat(-1, 10) &&
                   p.C == rat(3, 5) && q.A == rat(7, 10) &&
                   q.B == rat(11, 10) && q.C == rat(7, 5) &&
                   relations_hold(p) && relations_hold(q);
          });

  b.exact("hypergeom.residual", "f21:recurrence",
          "substitution residual vanishes to 40 terms, all four solutions",
          [] {
            for (const auto& k : {rat(-7, 10), rat(-11, 10)}) {
              const HypergeomParams p = params_for_k(Rational(k));
              if (!solution_satisfies_ode(p, f21_series(p, 40))) return false;
              if (!solution_satisfies_ode(p, second_solution(p, 40)))
                return false;
            }
            return true;
          });

  b.exact("hypergeom.gauge", "gauge:conjugation",
          "symbolic conjugation chain over Q[z, k, c]", gauge_ode_check);

  b.exact("hypergeom.reflection", "reflection:intertwiner",
          "z -> 1-z intertwines the operators; derived triples are fixed",
          [] {
            for (const auto& k : {rat(-7, 10), rat(-11, 10)}) {
              const HypergeomParams p = params_for_k(Rational(k));
              if (!(reflect_params(p) == p)) return false;
              if (!reflection_intertwines(p, 25)) return false;
            }
            return true;
          });

  b.exact("hypergeom.boundary", "boundary:exponents",
          "boundary exponent pair is (-1/30, 11/30)", [] {
            const auto [lo, hi] = boundary_exponents_25();
            return lo == rat(-1, 30) && hi == rat(11, 30);
          });

  return b.finish();
}

using SuiteFn = VerificationReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"qseries", suite_qseries},     {"modforms", suite_modforms},
      {"characters", suite_characters}, {"ode", suite_ode},
      {"symident", suite_symident},   {"numeric", suite_numeric},
      {"hypergeom", suite_hypergeom},
  };
  return table;
}

}  // namespace

bool VerificationReport::passed() const { return failures() == 0; }

int VerificationReport::failures() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) ++n;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& entry : suite_table()) v.push_back(entry.first);
    return v;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name,
                             const VerifyOptions& options) {
  if ((name == "ode" || name == "characters") && options.truncation < 16)
    throw std::invalid_argument(
        "the ode and characters suites need truncation >= 16, got " +
        std::to_string(options.truncation));
  for (const auto& [suite, fn] : suite_table())
    if (suite == name) return fn(options);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<VerificationReport> run_all(const VerifyOptions& options,
                                        int jobs) {
  const auto& table = suite_table();
  const int n = static_cast<int>(table.size());
  if (jobs <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    jobs = static_cast<int>(std::min<unsigned>(hw == 0 ? 1 : hw,
                                               static_cast<unsigned>(n)));
  }
  jobs = std::min(jobs, n);

  std::vector<VerificationReport> out(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      out[static_cast<std::size_t>(i)] =
          run_suite(table[static_cast<std::size_t>(i)].first, options);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace minmod
