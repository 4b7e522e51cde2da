/// @file numeric.hpp
/// @brief Double-precision evaluation of the exact expansions on the upper
///        half-plane: torus frames from Eisenstein data, finite-difference
///        checks of the connection-form and dtau lemmas, RK4 transport of
///        the variation system, and the modular S-matrix check.
///
/// Conventions:
///   * q^e means exp(2 pi i tau e) for rational e: single-valued in tau,
///     no branch choices on powers of q itself.
///   * The torus frame at (tau, lambda) carries the depressed cubic
///     x^3 + a x + b with a = -(pi^4/3) lambda^4 E4 and
///     b = -(2 pi^6/27) lambda^6 E6; its roots X_i sum to zero and its
///     discriminant is delta0 = -4a^3 - 27b^2 = (4 pi^12/27) lambda^12
///     (E4^3 - E6^2).
///   * The connection form is omega = pi i E2 dtau - 6 dlog lambda =
///     (1/2) dlog delta0 - 12 dlog lambda.
///   * All results are checked finite; NaN/Inf raises NonFiniteValue
///     rather than propagating silently.

#pragma once

#include "minmod/qseries.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace minmod {

using ComplexValue = std::complex<double>;

// ---- errors ------------------------------------------------------------

/// Im(tau) too small for the evaluation tail bound.
struct ConvergenceDomain : std::domain_error {
  using std::domain_error::domain_error;
};

/// Cubic discriminant magnitude below threshold (moduli-space boundary).
struct DegenerateCubic : std::domain_error {
  using std::domain_error::domain_error;
};

/// RK4 local error estimate above tolerance at the floor step size.
struct StepRejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computation produced NaN or Inf.
struct NonFiniteValue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The correlator component vanished along a nonzero integration path.
struct StateVanished : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- value types -------------------------------------------------------

/// Branch-point data of the genus-1 curve at modulus tau and scale lambda.
struct TorusFrame {
  ComplexValue tau;
  ComplexValue lambda;
  ComplexValue a;
  ComplexValue b;
  std::array<ComplexValue, 3> roots;  // X1, X2, X3 with sum ~ 0
  ComplexValue delta0;                // -4a^3 - 27b^2
};

/// The pair transported by the variation system.
struct VariationState {
  ComplexValue one{};  // <1>
  ComplexValue a1{};   // A1
};

/// Residuals of the connection-form check at one point.
struct OmegaCheck {
  double tau_residual;     // |((1/2) FD dlog delta0/dtau)/(pi i E2) - 1|
  double lambda_residual;  // |(FD dlog delta0/dlog lambda)/12 - 1|
};

/// Result of transporting a state along a tau path.
struct IntegrationResult {
  VariationState state;
  std::size_t steps = 0;  // accepted RK4 steps, including subdivisions
};

/// Closed-form state used to seed the integration; a1 is fixed by
/// requiring the first system equation to hold exactly at the base point.
struct CalibratedState {
  VariationState state;
  bool calibrated_at_start = true;
};

// ---- evaluation --------------------------------------------------------

/// Evaluates a supplied exact expansion at q = exp(2 pi i tau), summing
/// every stored coefficient (the caller owns the truncation).  Throws
/// ConvergenceDomain if Im(tau) <= 0.05, NonFiniteValue on overflow.
ComplexValue eval_series(const QSeries& f, ComplexValue tau);

/// Catalog evaluation by name: "E2", "E4", "E6", "E12", "Delta", "eta",
/// "j", "chi1", "chi2" (the two nu=5 characters, product route).  The
/// truncation is chosen from Im(tau) so the dropped tail is below 1e-14
/// relative (geometric bound with a coefficient-growth margin); series are
/// cached.  Throws ConvergenceDomain if Im(tau) <= 0.05.
ComplexValue eval_form(const std::string& name, ComplexValue tau);

/// d/dtau of the catalog form: 2 pi i times the Euler derivative.
ComplexValue eval_form_dtau(const std::string& name, ComplexValue tau);

// ---- torus frames ------------------------------------------------------

/// Builds the frame at (tau, lambda): a and b from E4, E6; roots by
/// Cardano's formula on x^3 + a x + b.  With `previous` given, roots are
/// labeled by nearest-matching against the previous frame (root tracking);
/// otherwise ordered by descending real part, then imaginary part.
/// Throws DegenerateCubic if |delta0| < 1e-20.
TorusFrame frame_from_tau(ComplexValue tau, ComplexValue lambda,
                          const std::optional<TorusFrame>& previous = {});

/// Frame at `tau` reached from `from` by stepping with root tracking;
/// subdivides whenever the root jump exceeds 0.1 times the minimum
/// pairwise root distance.
TorusFrame frame_step(const TorusFrame& from, ComplexValue tau);

// ---- lemma checks ------------------------------------------------------

/// Central finite differences of log delta0 at fixed lambda = 1 check
/// (1/2) dlog delta0/dtau = pi i E2(tau); the lambda direction checks
/// dlog delta0/dlog lambda = 12.  Residuals are relative; the tau one
/// scales as O(h^2).
OmegaCheck check_omega_lemma(ComplexValue tau, double h = 1e-5);

/// Takes xi_s = dX_s/dtau by central finite differences with root
/// tracking and returns |(-i pi lambda^2)(-4 sum_s xi_s / p'(X_s)) - 1|,
/// which the pullback identity dtau = -i pi lambda^2 detXi0/detV makes
/// small.  p = 4 prod (x - X_s).
double check_dtau_lemma(ComplexValue tau, double h = 1e-5,
                        ComplexValue lambda = ComplexValue(1.0, 0.0));

/// Fully analytic route to the same identity: detXi0 detV = 9 b da - 6 a db
/// with da/dtau, db/dtau from the weight-4/6 Serre-derivative identities,
/// so (-i pi lambda^2)(9 b a' - 6 a b')/delta0 must equal 1.  Returns the
/// deviation |ratio - 1|; no finite differences involved.
double check_dtau_chain_rule(ComplexValue tau,
                             ComplexValue lambda = ComplexValue(1.0, 0.0));

// ---- variation system --------------------------------------------------

/// Transports (one, a1) from tau0 to tau1 along the straight segment at
/// fixed lambda by RK4 on
///   d one/dtau = -(c/24) pi i E2 one - (1/8) a1 mu
///   d a1 /dtau = -((c-8)/24) pi i E2 a1 + (22/75) a one mu
/// with mu = 1/(-i pi lambda^2) the dtau-pullback of detXi0/detV,
/// a = -(pi^4/3) lambda^4 E4, and c = -22/5.  Step density is `density`
/// RK4 steps per unit arclength; each step is accepted only if the
/// halved-step comparison is below 1e-8, subdividing down to a floor of
/// 1/64 of the base step (StepRejected beyond).  A zero initial state
/// stays exactly zero; for nonzero initial states the `one` component
/// must not vanish along the path (StateVanished).
IntegrationResult integrate_variation_system(ComplexValue tau0,
                                             ComplexValue tau1,
                                             ComplexValue lambda,
                                             const VariationState& initial,
                                             int density = 200);

/// Closed form of the transported state for character s in {1, 2}:
///   one = delta0^( -c/48 ) chi_s(tau)        (principal branch)
///   a1  = 8 pi i lambda^2 delta0^(-c/48) chi_s'(tau)
/// the a1 line being exactly the first system equation solved for a1 at
/// tau (equivalently a1 = 4 lambda^2 <T> with <T> = 2 pi i d chi/dtau
/// rescaled by the same prefactor).
CalibratedState closed_form_state(ComplexValue tau, ComplexValue lambda,
                                  int s);

// ---- modular S-matrix --------------------------------------------------

/// The transformation matrix in the (chi1, chi2) ordering:
///   (2/sqrt 5) [ [-sin(2 pi/5), sin(pi/5)], [sin(pi/5), sin(2 pi/5)] ],
/// symmetric with square the identity.
std::array<std::array<double, 2>, 2> smatrix();

/// Evaluates both characters at tau and -1/tau for tau = i t,
/// t in {0.8, 1.0, 1.25}, and returns the largest relative deviation of
/// chi(-1/tau) from S chi(tau).
double check_smatrix();

}  // namespace minmod
