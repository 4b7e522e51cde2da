/// @file numeric.cpp
/// @brief Upper-half-plane evaluation, torus frames, lemma checks, and
///        RK4 transport of the variation system.

#include "minmod/numeric.hpp"

#include "minmod/characters.hpp"
#include "minmod/modforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace minmod {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMinImTau = 0.05;
constexpr double kCentralCharge = -22.0 / 5.0;
constexpr double kRk4Tolerance = 1e-8;
constexpr int kMaxHalvings = 6;  // floor step = base step / 64

double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

ComplexValue ensure_finite(const ComplexValue& v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw NonFiniteValue(std::string(what) + ": non-finite value");
  }
  return v;
}

void require_domain(ComplexValue tau, const char* what) {
  if (!(tau.imag() > kMinImTau)) {
    throw ConvergenceDomain(std::string(what) +
                            ": Im(tau) <= 0.05 breaks the tail bound");
  }
}

// ---- catalog with Im(tau)-driven truncation ----------------------------

// Smallest term count whose dropped tail is below 1e-14 relative, from
// |coeff_n| <~ margin * exp(growth * sqrt(n)) against |q|^n.
long long truncation_for(double im, double growth) {
  const double rate = 2.0 * kPi * im;
  const double log_margin = std::log(1e4);
  const double target = std::log(1e-16);
  for (long long n = 8; n <= 8000; ++n) {
    const double dn = static_cast<double>(n);
    if (log_margin + growth * std::sqrt(dn) - rate * dn < target) return n;
  }
  throw ConvergenceDomain("truncation_for: no admissible truncation");
}

// The j-function's coefficients grow like exp(4 pi sqrt(n)); everything
// else in the catalog is at worst partition-like or polynomial.
double growth_for(const std::string& name) {
  return name == "j" ? 13.0 : 3.0;
}

QSeries build_catalog(const std::string& name, long long terms) {
  if (name == "E2") return eisenstein(2, terms);
  if (name == "E4") return eisenstein(4, terms);
  if (name == "E6") return eisenstein(6, terms);
  if (name == "E12") return eisenstein(12, terms);
  if (name == "Delta") return delta(terms);
  if (name == "eta") return eta(terms);
  if (name == "j") return jfunction(terms);
  if (name == "chi1" || name == "chi2") {
    const ModelSpec spec = ModelSpec::make(5);
    return character_product(spec, name == "chi1" ? 1 : 2, terms);
  }
  throw std::invalid_argument("eval_form: unknown catalog name '" + name +
                              "'");
}

QSeries catalog_at(const std::string& name, long long terms) {
  static std::mutex mu;
  static std::map<std::string, std::pair<long long, QSeries>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end() || it->second.first < terms) {
    it = cache.insert_or_assign(name, std::make_pair(terms, build_catalog(
                                                                name, terms)))
             .first;
  }
  return it->second.second;
}

// ---- frame internals ---------------------------------------------------

std::array<ComplexValue, 3> cardano_roots(ComplexValue a, ComplexValue b) {
  // x^3 + a x + b: u^3, v^3 are the roots of t^2 + b t - a^3/27, with
  // u v = -a/3; the branch of u is immaterial once v is slaved to it.
  const ComplexValue d = b * b / 4.0 + a * a * a / 27.0;
  const ComplexValue s = std::sqrt(d);
  ComplexValue u3 = -b / 2.0 + s;
  if (std::abs(-b / 2.0 - s) > std::abs(u3)) u3 = -b / 2.0 - s;
  const ComplexValue u = std::pow(u3, 1.0 / 3.0);
  const ComplexValue v =
      std::abs(u) == 0.0 ? ComplexValue(0.0) : -a / (3.0 * u);
  const ComplexValue w(-0.5, std::sqrt(3.0) / 2.0);  // primitive cube root
  const ComplexValue wbar = std::conj(w);
  return {u + v, w * u + wbar * v, wbar * u + w * v};
}

double min_pairwise(const std::array<ComplexValue, 3>& r) {
  return std::min({std::abs(r[0] - r[1]), std::abs(r[1] - r[2]),
                   std::abs(r[0] - r[2])});
}

std::array<ComplexValue, 3> order_roots(
    std::array<ComplexValue, 3> roots,
    const std::optional<TorusFrame>& previous) {
  if (!previous) {
    std::sort(roots.begin(), roots.end(),
              [](const ComplexValue& x, const ComplexValue& y) {
                if (x.real() != y.real()) return x.real() > y.real();
                return x.imag() > y.imag();
              });
    return roots;
  }
  static constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  double best = -1.0;
  std::array<ComplexValue, 3> out = roots;
  for (const auto& p : kPerm) {
    double cost = 0.0;
    for (int i = 0; i < 3; ++i) {
      cost += std::abs(roots[p[i]] - previous->roots[i]);
    }
    if (best < 0.0 || cost < best) {
      best = cost;
      out = {roots[p[0]], roots[p[1]], roots[p[2]]};
    }
  }
  return out;
}

TorusFrame frame_step_impl(const TorusFrame& from, ComplexValue tau,
                           int depth) {
  const TorusFrame next = frame_from_tau(tau, from.lambda, from);
  double jump = 0.0;
  for (int i = 0; i < 3; ++i) {
    jump = std::max(jump, std::abs(next.roots[i] - from.roots[i]));
  }
  if (jump < 0.1 * min_pairwise(from.roots)) return next;
  if (depth >= 40) {
    throw NonFiniteValue("frame_step: root tracking failed to resolve");
  }
  const TorusFrame mid =
      frame_step_impl(from, (from.tau + tau) / 2.0, depth + 1);
  return frame_step_impl(mid, tau, depth + 1);
}

// ---- variation system internals ----------------------------------------

struct SystemContext {
  ComplexValue lambda;
  ComplexValue mu;  // pullback of detXi0/detV per unit dtau
};

VariationState system_rhs(const SystemContext& ctx, ComplexValue tau,
                          const VariationState& y) {
  const ComplexValue e2 = eval_form("E2", tau);
  const ComplexValue e4 = eval_form("E4", tau);
  const ComplexValue omega_tau = ComplexValue(0.0, kPi) * e2;
  const ComplexValue l2 = ctx.lambda * ctx.lambda;
  const ComplexValue a =
      -(std::pow(kPi, 4) / 3.0) * (l2 * l2) * e4;
  VariationState d;
  d.one = -(kCentralCharge / 24.0) * omega_tau * y.one -
          0.125 * y.a1 * ctx.mu;
  d.a1 = -((kCentralCharge - 8.0) / 24.0) * omega_tau * y.a1 +
         (22.0 / 75.0) * a * y.one * ctx.mu;
  return d;
}

VariationState rk4_step(const SystemContext& ctx, ComplexValue tau,
                        const VariationState& y, ComplexValue h) {
  const VariationState k1 = system_rhs(ctx, tau, y);
  const VariationState k2 =
      system_rhs(ctx, tau + h / 2.0,
                 {y.one + h / 2.0 * k1.one, y.a1 + h / 2.0 * k1.a1});
  const VariationState k3 =
      system_rhs(ctx, tau + h / 2.0,
                 {y.one + h / 2.0 * k2.one, y.a1 + h / 2.0 * k2.a1});
  const VariationState k4 =
      system_rhs(ctx, tau + h, {y.one + h * k3.one, y.a1 + h * k3.a1});
  const ComplexValue w = h / 6.0;
  return {y.one + w * (k1.one + 2.0 * k2.one + 2.0 * k3.one + k4.one),
          y.a1 + w * (k1.a1 + 2.0 * k2.a1 + 2.0 * k3.a1 + k4.a1)};
}

double state_norm(const VariationState& y) {
  return std::max(std::abs(y.one), std::abs(y.a1));
}

VariationState advance(const SystemContext& ctx, ComplexValue tau,
                       const VariationState& y, ComplexValue h, int depth,
                       std::size_t& steps) {
  const VariationState full = rk4_step(ctx, tau, y, h);
  const VariationState halfa = rk4_step(ctx, tau, y, h / 2.0);
  const VariationState halfb =
      rk4_step(ctx, tau + h / 2.0, halfa, h / 2.0);
  const double err =
      std::max(std::abs(full.one - halfb.one),
               std::abs(full.a1 - halfb.a1)) /
      std::max(1.0, state_norm(halfb));
  if (err <= kRk4Tolerance) {
    steps += 2;
    return halfb;
  }
  if (depth >= kMaxHalvings) {
    throw StepRejected(
        "integrate_variation_system: local error above 1e-8 at floor step");
  }
  const VariationState mid =
      advance(ctx, tau, y, h / 2.0, depth + 1, steps);
  return advance(ctx, tau + h / 2.0, mid, h / 2.0, depth + 1, steps);
}

}  // namespace

// ---- evaluation --------------------------------------------------------

ComplexValue eval_series(const QSeries& f, ComplexValue tau) {
  require_domain(tau, "eval_series");
  if (f.is_zero()) return ComplexValue(0.0);
  const ComplexValue two_pi_i(0.0, 2.0 * kPi);
  const ComplexValue qstep =
      std::exp(two_pi_i * tau / static_cast<double>(f.step()));
  const auto& coeffs = f.coeffs();
  ComplexValue acc(0.0);
  for (std::size_t n = coeffs.size(); n-- > 0;) {
    acc = acc * qstep + rat_to_double(coeffs[n]);
  }
  const ComplexValue lead =
      std::exp(two_pi_i * tau * rat_to_double(f.offset()));
  return ensure_finite(acc * lead, "eval_series");
}

ComplexValue eval_form(const std::string& name, ComplexValue tau) {
  require_domain(tau, "eval_form");
  const long long terms = truncation_for(tau.imag(), growth_for(name));
  return eval_series(catalog_at(name, terms), tau);
}

ComplexValue eval_form_dtau(const std::string& name, ComplexValue tau) {
  require_domain(tau, "eval_form_dtau");
  const long long terms = truncation_for(tau.imag(), growth_for(name));
  const ComplexValue euler =
      eval_series(derive_q(catalog_at(name, terms)), tau);
  return ComplexValue(0.0, 2.0 * kPi) * euler;
}

// ---- torus frames ------------------------------------------------------

TorusFrame frame_from_tau(ComplexValue tau, ComplexValue lambda,
                          const std::optional<TorusFrame>& previous) {
  require_domain(tau, "frame_from_tau");
  if (std::abs(lambda) == 0.0) {
    throw std::invalid_argument("frame_from_tau: lambda must be nonzero");
  }
  const ComplexValue e4 = eval_form("E4", tau);
  const ComplexValue e6 = eval_form("E6", tau);
  const ComplexValue l2 = lambda * lambda;
  const ComplexValue l4 = l2 * l2;
  const ComplexValue l6 = l4 * l2;
  TorusFrame frame;
  frame.tau = tau;
  frame.lambda = lambda;
  frame.a = -(std::pow(kPi, 4) / 3.0) * l4 * e4;
  frame.b = -(2.0 * std::pow(kPi, 6) / 27.0) * l6 * e6;
  frame.delta0 =
      -4.0 * frame.a * frame.a * frame.a - 27.0 * frame.b * frame.b;
  ensure_finite(frame.delta0, "frame_from_tau");
  if (std::abs(frame.delta0) < 1e-20) {
    throw DegenerateCubic("frame_from_tau: |discriminant| < 1e-20");
  }
  frame.roots = order_roots(cardano_roots(frame.a, frame.b), previous);
  for (const auto& r : frame.roots) ensure_finite(r, "frame_from_tau");
  return frame;
}

TorusFrame frame_step(const TorusFrame& from, ComplexValue tau) {
  return frame_step_impl(from, tau, 0);
}

// ---- lemma checks ------------------------------------------------------

OmegaCheck check_omega_lemma(ComplexValue tau, double h) {
  const ComplexValue lambda(1.0, 0.0);
  const TorusFrame plus = frame_from_tau(tau + h, lambda);
  const TorusFrame minus = frame_from_tau(tau - h, lambda);
  // log of the ratio keeps nearby values on one branch.
  const ComplexValue fd_tau =
      std::log(plus.delta0 / minus.delta0) / (2.0 * h);
  const ComplexValue target =
      ComplexValue(0.0, kPi) * eval_form("E2", tau);
  OmegaCheck out;
  out.tau_residual = std::abs(fd_tau / 2.0 / target - 1.0);

  const TorusFrame lplus = frame_from_tau(tau, lambda * std::exp(h));
  const TorusFrame lminus = frame_from_tau(tau, lambda * std::exp(-h));
  const ComplexValue fd_lambda =
      std::log(lplus.delta0 / lminus.delta0) / (2.0 * h);
  out.lambda_residual = std::abs(fd_lambda / 12.0 - 1.0);
  return out;
}

double check_dtau_lemma(ComplexValue tau, double h, ComplexValue lambda) {
  const TorusFrame base = frame_from_tau(tau, lambda);
  const TorusFrame plus = frame_from_tau(tau + h, lambda, base);
  const TorusFrame minus = frame_from_tau(tau - h, lambda, base);
  ComplexValue sum(0.0);
  for (int s = 0; s < 3; ++s) {
    const ComplexValue xi =
        (plus.roots[s] - minus.roots[s]) / (2.0 * h);
    // p = 4 prod (x - X_t) = 4(x^3 + a x + b), so p'(X_s) = 4(3 X_s^2 + a).
    const ComplexValue pprime =
        4.0 * (3.0 * base.roots[s] * base.roots[s] + base.a);
    sum += xi / pprime;
  }
  const ComplexValue val =
      ComplexValue(0.0, -kPi) * lambda * lambda * (-4.0 * sum);
  return std::abs(val - 1.0);
}

double check_dtau_chain_rule(ComplexValue tau, ComplexValue lambda) {
  const ComplexValue e2 = eval_form("E2", tau);
  const ComplexValue e4 = eval_form("E4", tau);
  const ComplexValue e6 = eval_form("E6", tau);
  const ComplexValue two_pi_i(0.0, 2.0 * kPi);
  // Weight-4/6 Serre-derivative identities in tau form:
  //   dE4/dtau = 2 pi i (E2 E4 - E6)/3,  dE6/dtau = 2 pi i (E2 E6 - E4^2)/2.
  const ComplexValue de4 = two_pi_i * (e2 * e4 - e6) / 3.0;
  const ComplexValue de6 = two_pi_i * (e2 * e6 - e4 * e4) / 2.0;
  const ComplexValue l2 = lambda * lambda;
  const ComplexValue l4 = l2 * l2;
  const ComplexValue l6 = l4 * l2;
  const ComplexValue a = -(std::pow(kPi, 4) / 3.0) * l4 * e4;
  const ComplexValue b = -(2.0 * std::pow(kPi, 6) / 27.0) * l6 * e6;
  const ComplexValue da = -(std::pow(kPi, 4) / 3.0) * l4 * de4;
  const ComplexValue db = -(2.0 * std::pow(kPi, 6) / 27.0) * l6 * de6;
  const ComplexValue delta0 = -4.0 * a * a * a - 27.0 * b * b;
  const ComplexValue ratio = ComplexValue(0.0, -kPi) * l2 *
                             (9.0 * b * da - 6.0 * a * db) / delta0;
  return std::abs(ratio - 1.0);
}

// ---- variation system --------------------------------------------------

IntegrationResult integrate_variation_system(ComplexValue tau0,
                                             ComplexValue tau1,
                                             ComplexValue lambda,
                                             const VariationState& initial,
                                             int density) {
  require_domain(tau0, "integrate_variation_system");
  require_domain(tau1, "integrate_variation_system");
  if (density <= 0) {
    throw std::invalid_argument(
        "integrate_variation_system: density must be positive");
  }
  SystemContext ctx;
  ctx.lambda = lambda;
  ctx.mu = 1.0 / (ComplexValue(0.0, -kPi) * lambda * lambda);
  const bool zero_initial = state_norm(initial) == 0.0;

  const ComplexValue span = tau1 - tau0;
  const double arclength = std::abs(span);
  const long long nsteps = std::max<long long>(
      1, static_cast<long long>(std::ceil(arclength * density)));
  const ComplexValue h = span / static_cast<double>(nsteps);

  IntegrationResult out;
  out.state = initial;
  for (long long i = 0; i < nsteps; ++i) {
    const ComplexValue tau = tau0 + h * static_cast<double>(i);
    out.state = advance(ctx, tau, out.state, h, 0, out.steps);
    ensure_finite(out.state.one, "integrate_variation_system");
    ensure_finite(out.state.a1, "integrate_variation_system");
    if (!zero_initial && std::abs(out.state.one) < 1e-300) {
      throw StateVanished(
          "integrate_variation_system: <1> vanished along the path");
    }
  }
  return out;
}

CalibratedState closed_form_state(ComplexValue tau, ComplexValue lambda,
                                  int s) {
  if (s != 1 && s != 2) {
    throw IndexOutOfRange("closed_form_state: s must be 1 or 2");
  }
  const TorusFrame frame = frame_from_tau(tau, lambda);
  // delta0^(-c/48) with -c/48 = 11/120, principal branch.
  const ComplexValue pref =
      std::exp((11.0 / 120.0) * std::log(frame.delta0));
  const std::string name = s == 1 ? "chi1" : "chi2";
  const ComplexValue chi = eval_form(name, tau);
  const ComplexValue dchi = eval_form_dtau(name, tau);
  CalibratedState out;
  out.state.one = ensure_finite(pref * chi, "closed_form_state");
  // First system equation solved for a1 at tau:
  //   pref * chi' = -(1/8) a1 mu  with  mu = 1/(-i pi lambda^2),
  // giving a1 = 8 pi i lambda^2 pref chi'.
  out.state.a1 = ensure_finite(
      ComplexValue(0.0, 8.0 * kPi) * lambda * lambda * pref * dchi,
      "closed_form_state");
  out.calibrated_at_start = true;
  return out;
}

// ---- modular S-matrix --------------------------------------------------

std::array<std::array<double, 2>, 2> smatrix() {
  const double f = 2.0 / std::sqrt(5.0);
  const double s1 = std::sin(kPi / 5.0);
  const double s2 = std::sin(2.0 * kPi / 5.0);
  return {{{-f * s2, f * s1}, {f * s1, f * s2}}};
}

double check_smatrix() {
  const auto S = smatrix();
  double worst = 0.0;
  for (const double t : {0.8, 1.0, 1.25}) {
    const ComplexValue tau(0.0, t);
    const ComplexValue dual(0.0, 1.0 / t);  // -1/(i t) = i/t
    const ComplexValue c1 = eval_form("chi1", tau);
    const ComplexValue c2 = eval_form("chi2", tau);
    const ComplexValue d1 = eval_form("chi1", dual);
    const ComplexValue d2 = eval_form("chi2", dual);
    worst = std::max(
        worst, std::abs(d1 - (S[0][0] * c1 + S[0][1] * c2)) / std::abs(d1));
    worst = std::max(
        worst, std::abs(d2 - (S[1][0] * c1 + S[1][1] * c2)) / std::abs(d2));
  }
  return worst;
}

}  // namespace minmod
