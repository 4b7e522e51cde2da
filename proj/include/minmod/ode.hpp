/// @file ode.hpp
/// @brief The order-M covariant differential operator annihilating the
///        (2, nu) character family.
///
/// The operator has the shape
///
///   D = Dtower^M + sum_{m=0}^{M-2} Omega_{2(M-m)} Dtower^m ,
///
/// where Dtower^m is the iterated Serre derivative with weights
/// 0, 2, ..., 2(m-1) and Omega_{2k} is a weight-2k coefficient form.  For
/// 2k in {4, 6, 8, 10} the weight space is one-dimensional and
/// Omega_{2k} = alpha_m E_{2k} (with E8 = E4^2 and E10 = E4 E6); for
/// 2k = 12 a cusp-form component enters: Omega_12 = alpha_0 E12 +
/// alpha_cusp Delta.  The coefficient of Dtower^(M-1) vanishes
/// identically; derive_alphas() checks this rather than assuming it.
///
/// The Eisenstein alphas are determined purely by exponent bookkeeping:
/// acting on q^kappa, Dtower^m contributes prod_{l<m}(kappa - l/6) at
/// leading order, so matching
///
///   prod_{s=1..M}(kappa - kappa_s)
///     = prod_{l<M}(kappa - l/6) + sum_m alpha_m prod_{l<m}(kappa - l/6)
///
/// coefficient-by-coefficient yields every alpha_m.  The cusp coefficient
/// (order M = 6 only) is invisible at leading order and is fixed by one
/// linear condition at the next q-order of the vacuum character.

#pragma once

#include "minmod/characters.hpp"
#include "minmod/modforms.hpp"
#include "minmod/polynomial.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace minmod {

/// Exponent list with a repeated entry: the matching system degenerates.
struct SingularSystem : std::domain_error {
  using std::domain_error::domain_error;
};

/// The kappa^(M-1) coefficients of the matching identity disagree, i.e.
/// the exponents are incompatible with a vanishing Dtower^(M-1) term.
struct ConsistencyFailure : std::logic_error {
  using std::logic_error::logic_error;
};

/// A series was supplied with too small a trusted window for the request.
struct InsufficientTruncation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OdeOperator {
  int M = 0;
  std::map<int, Rational> alphas;      // m -> alpha_m, m = 0..M-2
  std::optional<Rational> alpha_cusp;  // Delta component of Omega_12 (M = 6)
};

// ---- indicial algebra --------------------------------------------------

/// prod_{s=1..M} (kappa - kappa_s): the monic polynomial whose roots are
/// the character exponents.
Polynomial indicial_polynomial(const ModelSpec& spec);

/// prod_{l=0}^{m-1} (kappa - l/6): the exponent-level action of Dtower^m
/// on q^kappa (m = 0 gives the constant 1).
Polynomial tower_indicial(int m);

// ---- operator derivation ----------------------------------------------

/// Solve the exponent-matching identity for the alphas of an arbitrary
/// exponent list (size M <= 6).  Throws SingularSystem on repeated
/// exponents and ConsistencyFailure when the kappa^(M-1) coefficients
/// disagree.  The cusp coefficient is left unset (its determination needs
/// the character series, not just exponents).
OdeOperator derive_alphas(const std::vector<Rational>& kappas);

/// Alphas for the (2, nu) model, including the cusp coefficient when
/// M = 6.  Throws std::domain_error for nu > 13 (the weight-12 space is
/// the last one handled by the {E4, E6, E4^2, E4 E6, E12, Delta} basis).
OdeOperator derive_alphas(const ModelSpec& spec);

// ---- application -------------------------------------------------------

/// The coefficient form Omega_{2(M-m)} as a series trusted through
/// `terms` integer q-steps; includes the Delta component for m = 0 when
/// alpha_cusp is set.  Returns the zero series for the absent m = M-1
/// slot and for m outside 0..M-1.
QSeries omega_series(const OdeOperator& op, int m, long long terms);

/// D f: requires a relative trusted window of at least M + 1 steps
/// (InsufficientTruncation otherwise); the output keeps f's window.
QSeries apply(const OdeOperator& op, const QSeries& f);

// ---- cross-checks ------------------------------------------------------

/// Order-2 route for nu = 5: verifies Dtower_2 Dtower_0 f = (11/3600) E4 f
/// for both characters, computed by direct composition, and that the
/// residual series coincides with apply(derive_alphas(5), f).
bool second_order_check_25(long long trunc);

/// Bordered-Wronskian construction: given M solutions, returns the M+1
/// cofactor series w_0..w_M with  sum_i w_i Dtower^i f = 0  for every
/// supplied solution f.  Ratios w_i / w_M reproduce the Omega forms when
/// the solutions genuinely satisfy a common order-M equation.
std::vector<QSeries> wronskian_ode(const std::vector<QSeries>& solutions);

/// The two exponents alpha with alpha^2 - alpha/3 - 11/900 = 0, governing
/// the colliding-branch-point behaviour of the nu = 5 pair; returned as
/// (-1/30, 11/30).
std::pair<Rational, Rational> boundary_exponents_25();

}  // namespace minmod
