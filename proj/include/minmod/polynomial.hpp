/// @file polynomial.hpp
/// @brief Dense univariate polynomials over the rationals.
///
/// Used for indicial algebra: the exponent-level action of differential
/// operators on q^kappa is a polynomial in the formal variable kappa, and
/// deriving operator coefficients reduces to exact linear algebra on these
/// polynomials.  Coefficients are stored ascending with trailing zeros
/// trimmed; the zero polynomial has an empty coefficient vector and
/// degree -1.

#pragma once

#include "minmod/rational.hpp"

#include <string>
#include <vector>

namespace minmod {

class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial

  /// From ascending coefficients c0 + c1 x + ...; trailing zeros trimmed.
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial constant(const Rational& c);
  static Polynomial variable();  // x

  /// Monic product of (x - r) over the given roots.
  static Polynomial from_roots(const std::vector<Rational>& roots);

  bool is_zero() const { return c_.empty(); }
  long long degree() const { return static_cast<long long>(c_.size()) - 1; }

  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(long long i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Evaluation by Horner's rule.
  Rational operator()(const Rational& x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> c_;

  void trim();
  friend Polynomial add(const Polynomial&, const Polynomial&);
  friend Polynomial mul(const Polynomial&, const Polynomial&);
  friend Polynomial scale(const Rational&, const Polynomial&);
  friend Polynomial derivative(const Polynomial&);
};

// ---- arithmetic --------------------------------------------------------

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
Polynomial neg(const Polynomial& a);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Rational& c, const Polynomial& a);
Polynomial derivative(const Polynomial& a);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return add(a, b);
}
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return sub(a, b);
}
inline Polynomial operator-(const Polynomial& a) { return neg(a); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return mul(a, b);
}
inline Polynomial operator*(const Rational& c, const Polynomial& a) {
  return scale(c, a);
}

// ---- rendering ---------------------------------------------------------

/// E.g. "x^2 - 1/6 x - 11/3600" (descending powers).
std::string to_string(const Polynomial& a, const char* var = "x");
std::ostream& operator<<(std::ostream& os, const Polynomial& a);

}  // namespace minmod
