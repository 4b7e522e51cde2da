/// @file qseries.hpp
/// @brief Truncated power series in q with exact rational coefficients and
///        fractional exponents.
///
/// A QSeries models a sum  sum_n c_n q^(offset + n/step)  with c_n rational,
/// step a positive integer, and offset an arbitrary rational.  Exponents of
/// stored coefficients live on the lattice offset + (1/step) * Z>=0.  Every
/// series additionally carries a *trusted bound* T: its coefficients are
/// known exactly for every exponent e < T and unknown at or beyond T.
/// Exponents inside the trusted window that carry no stored entry (off the
/// lattice, or trimmed trailing slots) are exactly zero.
///
/// Canonical form (maintained by every operation):
///   * leading stored coefficient nonzero, trailing zeros trimmed;
///   * step minimal: the gcd of the indices of nonzero entries and step is 1;
///   * the zero series stores no coefficients at all (offset 0, step 1) and
///     keeps only its trusted bound.
///
/// Truncation bookkeeping is exact: sums are trusted below min(T_a, T_b);
/// products below min(off_a + T_b, off_b + T_a); inversion and powers
/// preserve the window measured relative to the leading exponent.

#pragma once

#include "minmod/rational.hpp"

#include <iosfwd>
#include <vector>

namespace minmod {

/// Inverting (or raising to a non-positive power) a series that is
/// identically zero on its trusted window.
struct ZeroLeadingCoefficient : std::domain_error {
  using std::domain_error::domain_error;
};

/// Fractional power of a series whose leading coefficient is not 1.
struct NonUnitLeading : std::domain_error {
  using std::domain_error::domain_error;
};

class QSeries {
 public:
  /// Zero series trusted for all exponents below `trusted`.
  static QSeries zero(const Rational& trusted);

  /// c * q^e, trusted below `trusted`.
  static QSeries monomial(const Rational& c, const Rational& e,
                          const Rational& trusted);

  /// Series from a dense coefficient run: coeffs[n] multiplies
  /// q^(offset + n/step).  Trusted below `trusted`.
  static QSeries from_coeffs(const Rational& offset, long long step,
                             std::vector<Rational> coeffs,
                             const Rational& trusted);

  QSeries() : step_(1), trusted_(0) {}

  bool is_zero() const { return coeffs_.empty(); }

  /// Exponent of the leading (first nonzero) term; requires !is_zero().
  const Rational& offset() const;

  /// Lattice denominator: stored exponents are offset + n/step.
  long long step() const { return step_; }

  /// Exponent bound below which all coefficients are known exactly.
  const Rational& trusted_below() const { return trusted_; }

  /// Dense coefficients starting at the leading exponent.
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Leading coefficient; requires !is_zero().
  const Rational& leading_coeff() const;

  /// Exponent of stored slot n (offset + n/step).
  Rational exponent_at(std::size_t n) const;

  /// Coefficient of q^e for any rational e < trusted_below(); exponents
  /// carrying no stored entry give 0.  Throws std::out_of_range for
  /// e >= trusted_below().
  Rational coeff(const Rational& e) const;

  /// Lower bound on the leading exponent: offset() when nonzero, the
  /// trusted bound for the zero series (zero = O(q^T)).
  const Rational& low_bound() const { return is_zero() ? trusted_ : offset_; }

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  Rational offset_;               // exponent of coeffs_[0]
  long long step_;                // lattice denominator, >= 1
  std::vector<Rational> coeffs_;  // dense on the lattice, leading nonzero
  Rational trusted_;              // exact below this exponent

  void canonicalize();
  friend QSeries add(const QSeries&, const QSeries&);
  friend QSeries mul(const QSeries&, const QSeries&);
  friend QSeries invert(const QSeries&);
  friend QSeries pow_rational(const QSeries&, const Rational&);
  friend QSeries derive_q(const QSeries&);
  friend QSeries scale(const Rational&, const QSeries&);
  friend QSeries shift(const QSeries&, const Rational&);
  friend QSeries truncate(const QSeries&, const Rational&);
};

// ---- arithmetic --------------------------------------------------------

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries neg(const QSeries& a);
QSeries mul(const QSeries& a, const QSeries& b);

/// Multiplicative inverse; the window length relative to the leading
/// exponent is preserved.  Throws ZeroLeadingCoefficient on the zero series.
QSeries invert(const QSeries& a);

/// a^e for integer e (binary exponentiation; negative e inverts first).
QSeries pow_int(const QSeries& a, long long e);

/// a^e for rational e.  Integer e delegates to pow_int.  Fractional e
/// requires leading coefficient exactly 1 (NonUnitLeading otherwise); the
/// result has leading exponent e * offset and the same relative window.
QSeries pow_rational(const QSeries& a, const Rational& e);

/// Euler operator q d/dq: multiplies each coefficient by its exponent.
QSeries derive_q(const QSeries& a);

/// c * a.
QSeries scale(const Rational& c, const QSeries& a);

/// q^e * a (shifts every exponent and the trusted bound by e).
QSeries shift(const QSeries& a, const Rational& e);

/// Restrict the trusted window to exponents below `bound`.
QSeries truncate(const QSeries& a, const Rational& bound);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator-(const QSeries& a) { return neg(a); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(const Rational& c, const QSeries& a) { return scale(c, a); }

// ---- comparison / inspection -------------------------------------------

/// Equality on the intersection of the trusted windows.
bool agree(const QSeries& a, const QSeries& b);

/// True iff every trusted coefficient below min(bound, trusted) vanishes.
bool is_zero_below(const QSeries& a, const Rational& bound);

/// Number of lattice exponents offset + n/step (n >= 0) strictly below
/// `bound`; 0 when offset >= bound.
long long lattice_count(const Rational& offset, long long step,
                        const Rational& bound);

/// Human-readable rendering, e.g. "q^(1/40)*(1 - q^2 - q^3) + O(q^(a/b))".
std::string to_string(const QSeries& a);
std::ostream& operator<<(std::ostream& os, const QSeries& a);

}  // namespace minmod
