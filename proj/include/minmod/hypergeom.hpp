/// @file hypergeom.hpp
/// @brief Exact reduction of the singular-vacuum flow equation to Gauss
///        hypergeometric form, with series solutions about z = 0.
///
/// On the line where the quadratic invariant a vanishes nowhere but the
/// discriminant locus is approached, the second-order equation for the
/// rescaled correlator in the algebraic coordinate z carries double poles
/// at z = 0 and z = 1 in its zeroth-order coefficient.  Conjugating the
/// operator by g(z)^(-k), g = z (z - 1), shifts local exponents by k at
/// both finite singular points; the double poles cancel exactly when
///
///     k^2 + (9/5) k - 7 c / 40 = 0      (central charge c = -22/5),
///
/// i.e. k = -7/10 or k = -11/10, and the conjugate operator is then the
/// Gauss hypergeometric operator
///
///     z (1 - z) w'' + [C - (A + B + 1) z] w' - A B w
///
/// with parameters pinned by the three relations
///
///     C = -(4/5 + 2 k),   A + B = 2 C - 1,   A B = 13 c / 40 - 2 k,
///
/// giving (A, B; C) = (3/10, -1/10; 3/5) for k = -7/10 and
/// (7/10, 11/10; 7/5) for k = -11/10.  This module derives the admissible
/// k values and parameter triples from those relations (never hard-coded),
/// proves the conjugation identity symbolically over an exact trivariate
/// polynomial ring in (z, k, c), and builds the exact Frobenius series
/// solutions about z = 0 together with the z -> 1 - z reflection.

#pragma once

#include "minmod/polynomial.hpp"
#include "minmod/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace minmod {

// ---- errors ------------------------------------------------------------

/// k does not satisfy the exponent-cancellation quadratic.
struct InvalidK : std::domain_error {
  using std::domain_error::domain_error;
};

/// Hypergeometric parameters whose series recurrence divides by zero
/// (C, respectively 2 - C, a nonpositive integer).
struct DegenerateParameters : std::domain_error {
  using std::domain_error::domain_error;
};

// ---- value types -------------------------------------------------------

/// Gauss parameters (A, B; C) tied to the gauge shift k that produced them.
struct HypergeomParams {
  Rational A;
  Rational B;
  Rational C;
  Rational k;

  friend bool operator==(const HypergeomParams&,
                         const HypergeomParams&) = default;
};

/// Frobenius series  z^exponent_at_0 * sum_n coefficients[n] z^n  about
/// z = 0; coefficients are exact and stored ascending from n = 0.
struct SeriesSolution {
  Rational exponent_at_0;
  std::vector<Rational> coefficients;

  friend bool operator==(const SeriesSolution&,
                         const SeriesSolution&) = default;
};

// ---- gauge shift and parameters ----------------------------------------

/// Central charge on the singular-vacuum line: -22/5.
Rational hypergeom_central_charge();

/// Zeroth-order double-pole obstruction  k^2 + (9/5) k - 7 c / 40  at
/// c = -22/5.  The conjugate operator is hypergeometric iff this vanishes.
Rational double_pole_obstruction(const Rational& k);

/// True iff conjugation by g^(-k) cancels both double poles.
bool is_hypergeometric_gauge(const Rational& k);

/// The two exact roots of the cancellation quadratic, solved by the
/// rational square root of its discriminant: (-7/10, -11/10).
std::pair<Rational, Rational> allowed_k();

/// Exponent of the overall g-power relating the rescaled correlator to the
/// hypergeometric solution:  e(k) = -c/8 + k,  so -3/20 at k = -7/10 and
/// -11/20 at k = -11/10.
Rational gauge_exponent(const Rational& k);

/// Derive (A, B; C) from the three defining relations: C = -(4/5 + 2k),
/// A + B = 2C - 1, A B = 13c/40 - 2k, splitting A and B by the rational
/// square root of the Vieta discriminant (A > B for k = -7/10 and A < B
/// for k = -11/10, so the triples read (3/10, -1/10; 3/5) and
/// (7/10, 11/10; 7/5)).  Throws InvalidK unless k is one of allowed_k().
HypergeomParams params_for_k(const Rational& k);

/// True iff all three defining relations and the cancellation quadratic
/// hold simultaneously for the given fields.  Used by the mutation test:
/// any single-field change must break at least one relation.
bool relations_hold(const HypergeomParams& p);

// ---- series solutions --------------------------------------------------

/// Standard Gauss series about z = 0 (exponent 0): a_0 = 1 and
///   a_{n+1} = a_n (A + n)(B + n) / ((C + n)(n + 1)).
/// Throws DegenerateParameters if C is a nonpositive integer reached by
/// the recurrence, std::invalid_argument if terms <= 0.
SeriesSolution f21_series(const HypergeomParams& p, long long terms);

/// Second Frobenius solution about z = 0: exponent 1 - C with shifted
/// parameters (A + 1 - C, B + 1 - C; 2 - C).  Throws DegenerateParameters
/// if 2 - C is a nonpositive integer reached by the recurrence.
SeriesSolution second_solution(const HypergeomParams& p, long long terms);

/// Parameters after the reflection z -> 1 - z: (A, B; A + B + 1 - C).
/// Series in 1 - z with these parameters solve the original equation.
HypergeomParams reflect_params(const HypergeomParams& p);

/// Indicial polynomial at z = 0:  rho (rho - 1 + C),  returned in the
/// formal variable rho; its roots are the local exponents {0, 1 - C}.
Polynomial indicial_at_0(const HypergeomParams& p);

/// Local exponents at z = 0 as the exact roots of indicial_at_0.
std::pair<Rational, Rational> local_exponents_at_0(const HypergeomParams& p);

// ---- substitution checks -----------------------------------------------

/// Low part of the residual of substituting  z^rho u(z)  into the Gauss
/// operator: returns R with  L[z^rho u] = z^(rho - 1) R(z)  for polynomial
/// u truncated at degree terms - 1.  An exact solution has R's
/// coefficients 0 .. terms - 1 all zero; the z^terms coefficient carries
/// the truncation tail -a_{terms-1} (A + terms - 1)(B + terms - 1).
Polynomial substitution_residual(const HypergeomParams& p,
                                 const SeriesSolution& s);

/// True iff the residual vanishes identically through the truncation and
/// the single surviving tail coefficient matches the dropped term exactly.
bool solution_satisfies_ode(const HypergeomParams& p,
                            const SeriesSolution& s);

/// True iff the reflection intertwines the Gauss operators exactly:
///   L_{A,B,C}[u(1 - z)] = (L_{A,B,A+B+1-C}[u])(1 - z)
/// as polynomial identities for u = z^j, j = 0 .. degree_bound.
bool reflection_intertwines(const HypergeomParams& p, int degree_bound);

// ---- symbolic conjugation proof ----------------------------------------

/// Full symbolic verification of the gauge reduction over the exact ring
/// Q[z, k, c]: conjugating  d^2 - (4/5)(g'/g) d - (7c/40)(g'/g)^2
/// + (13c/40)/g  by g^(-k) yields first-order coefficient
/// -(4/5 + 2k) g'/g and zeroth-order coefficient
/// Q (g'/g)^2 - k g''/g + (13c/40)/g with Q = k(k+1) + 4k/5 - 7c/40;
/// the remainder of the cleared zeroth-order numerator mod g is exactly Q
/// (so double poles cancel iff Q = 0); at c = -22/5 and each admissible k
/// the zeroth order collapses to (13c/40 - 2k)/g = A B / g and the first
/// order matches C; at k = 0 the double poles survive.  Returns true only
/// if every step holds.
bool gauge_ode_check();

}  // namespace minmod
