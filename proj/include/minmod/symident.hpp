/// @file symident.hpp
/// @brief Exact symbolic verification of the root-deformation calculus.
///
/// The torus-side analysis rests on a family of polynomial identities for a
/// depressed cubic 4(x - X1)(x - X2)(x - X3) = 4(x^3 + a x + b) whose roots
/// X_i are deformed in directions xi_i = dX_i, subject to the constraints
/// X1 + X2 + X3 = 0 and xi1 + xi2 + xi3 = 0.  Everything lives in the
/// polynomial ring
///
///   Q[X1, X2, X3, xi1, xi2, xi3, x, one, A1, c]
///
/// where x is a spectator position and one ("<1>"), A1, c are formal
/// scalars (a partition function, its first moment, and a central-charge
/// constant).  Each verify_* operation proves its identity by full sparse
/// expansion -- the difference of the two sides is expanded and compared
/// with the zero polynomial -- and additionally spot-checks the original
/// quotient form at 20 deterministic pseudo-random rational points using
/// plain rational arithmetic as an independent oracle.  Guard identities
/// (special deformations, known collapses, degree bounds) are asserted
/// along the way; an operation returns true only if every one holds.

#pragma once

#include "minmod/multipoly.hpp"
#include "minmod/rational.hpp"

#include <array>

namespace minmod {

// ---- variable layout ----

/// Indices of the fixed variable tuple used by this module.
inline constexpr int kVarX1 = 0;
inline constexpr int kVarX2 = 1;
inline constexpr int kVarX3 = 2;
inline constexpr int kVarXi1 = 3;
inline constexpr int kVarXi2 = 4;
inline constexpr int kVarXi3 = 5;
inline constexpr int kVarPos = 6;   ///< spectator position x
inline constexpr int kVarOne = 7;   ///< formal scalar <1>
inline constexpr int kVarA1 = 8;    ///< formal scalar A1 (first moment)
inline constexpr int kVarC = 9;     ///< formal central-charge constant c
inline constexpr int kVarCount = 10;

/// Zero / constant / single-variable helpers pinned to this layout.
MultiPoly sym_zero();
MultiPoly sym_const(const Rational& value);
MultiPoly sym_var(int index);

// ---- derived polynomials ----

/// The standard derived quantities of the root configuration:
/// cubic coefficients a, b, their deformations da, db, the three 3x3
/// determinants (Vandermonde V and the two weighted variants), the
/// discriminant delta0 = (det V)^2, the cleared connection form
/// omega * det V = -3 det Xi1, and the linear form theta(x) = -4c<1>x + A1.
struct SymbolTable {
  MultiPoly a;            ///< X1X2 + X1X3 + X2X3
  MultiPoly b;            ///< -X1X2X3
  MultiPoly da;           ///< sum over i != j of xi_i X_j
  MultiPoly db;           ///< -(xi1X2X3 + xi2X1X3 + xi3X1X2)
  MultiPoly det_v;        ///< Vandermonde determinant of (X1, X2, X3)
  MultiPoly det_xi0;      ///< determinant with weight row (xi1, xi2, xi3)
  MultiPoly det_xi1;      ///< determinant with weight row (xi1X1, ...)
  MultiPoly delta0;       ///< (det_v)^2
  MultiPoly omega_det_v;  ///< -3 det_xi1 (the cleared connection form)
  MultiPoly theta;        ///< -4 c <1> x + A1
  MultiPoly cubic;        ///< 4 (x - X1)(x - X2)(x - X3)

  static SymbolTable make();
};

/// Substitution X3 -> -X1 - X2, xi3 -> -xi1 - xi2 imposing the two sum
/// constraints; a ring homomorphism.  Identity claims that hold only on
/// the constraint locus are asserted after applying it.
struct ConstraintContext {
  MultiPoly x3_image;
  MultiPoly xi3_image;

  static ConstraintContext make();

  MultiPoly apply(const MultiPoly& p) const;
};

// ---- calculus helpers ----

/// Determinant of a 3x3 matrix of polynomials by cofactor expansion.
MultiPoly det3(const std::array<std::array<MultiPoly, 3>, 3>& m);

/// The formal derivation d with d(X_i) = xi_i, d(xi_i) = 0, d(scalars) = 0,
/// extended to the whole ring by the Leibniz rule.
MultiPoly deformation_derivative(const MultiPoly& p);

/// Simultaneous index 3-cycle (1 -> 2 -> 3 -> 1) on the X and xi variables.
MultiPoly cycle_indices(const MultiPoly& p);

/// p + cycle(p) + cycle(cycle(p)).
MultiPoly cyclic_sum(const MultiPoly& p);

// ---- identity verifiers ----

/// Vandermonde factorization det V = (X1-X2)(X2-X3)(X3-X1), sign and all,
/// without constraints; includes a numeric oracle and a repeated-root
/// degeneration.
bool verify_detV_product();

/// The weighted-sum formulas det Xi_{0,1} / det V = -4 sum_s w_s / p'(X_s)
/// with weights w_s = xi_s resp. xi_s X_s, in cleared-denominator form,
/// without constraints.
bool verify_xi_quotients();

/// det Xi1 * det V = 2 a^2 da + 9 b db on the constraint locus, plus the
/// proportional-deformation collapse xi = t X where both sides reduce to
/// -t * delta0.
bool verify_det_xi1_pairing();

/// det Xi0 * det V = 9 b da - 6 a db on the constraint locus, plus the
/// collapse for the quadratic deformation xi_i = t (X_i^2 - mean), where
/// both sides reduce to -t * delta0.
bool verify_det_xi0_pairing();

/// The derivation structure: d(a) = da, d(b) = db, d(det V) = -3 det Xi1,
/// d(delta0) = 2 (-3 det Xi1) det V, delta0 = -4a^3 - 27b^2, and the
/// pairwise-difference form of the connection numerator, all on the
/// constraint locus (the first two hold without constraints).
bool verify_deformation_calculus();

/// The cyclically symmetrized theta-weighted sum
///   sum_cyc -theta(X1)(xi2X3 + xi3X2) / ((X1-X2)(X3-X1))
/// equals -(8c/3) a <1> (det Xi0 / det V) - 2 A1 (det Xi1 / det V) on the
/// constraint locus, with c symbolic and again at c = -22/5; includes the
/// two cyclic-sum vanishing lemmas and the auxiliary weighted-sum identity
/// with weights xi1 X2 X3.
bool verify_theta_cyclic_identity();

/// Substituting the second-order reduction
///   P1 = -(77/400) a1^2 <1> + (1/10) a1 A1 + (143/100) a2 <1>
///        - (1/16) A1^2 / <1>
/// into C = -2 P1 - (1/8) A1^2 / <1> - (8c/3) a <1> with c = -22/5,
/// a = a2/4, and a1 = 0 collapses C to (22/75) a <1>; in particular all
/// A1^2 terms cancel.  Divisions by <1> are cleared to a common
/// denominator.
bool verify_csing_simplification();

/// The three reduction steps tying the two first-order systems together:
/// (i) 2 sum_s xi_s theta_s / p'(X_s) with theta_s = -c X_s <1> + A1/4
///     equals -(c/6) omega <1> - (A1/8) det Xi0 / det V;
/// (ii) sum_s xi_s X_s^2 / p'(X_s) = -(a/3) sum_s xi_s / p'(X_s);
/// (iii) sum_s xi_s / (x - X_s)^m decays like x^(-(m+1)): the cleared
///       numerator has x-degree 2m-1 < 3m - m for m = 1, 2, 3.
bool verify_system_equivalence();

}  // namespace minmod
