/// @file multipoly.hpp
/// @brief Sparse exact multivariate polynomials over the rationals.
///
/// A MultiPoly is an element of Q[x_0, ..., x_{n-1}] stored as a sparse map
/// from exponent vectors to nonzero rational coefficients.  The variable
/// count is fixed per polynomial and enforced across every operation, so a
/// module can pin a tuple of named variables to fixed indices and rely on
/// exact ring arithmetic: addition, multiplication, substitution of a
/// polynomial for a variable (a ring homomorphism), partial derivatives,
/// and exact evaluation at rational points.  All identity checking in the
/// determinant-calculus and gauge-transformation modules reduces to "expand
/// and compare with zero" in this ring.

#pragma once

#include "minmod/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace minmod {

class MultiPoly {
 public:
  /// Exponent vector, one entry per variable, all entries >= 0.
  using Monomial = std::vector<int>;
  using TermMap = std::map<Monomial, Rational>;

  /// The zero polynomial in `nvars` variables.
  explicit MultiPoly(int nvars);

  static MultiPoly constant(int nvars, const Rational& value);
  static MultiPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Number of stored (nonzero) terms.
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of the given monomial; zero if absent.
  Rational coefficient(const Monomial& m) const;

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;

  /// Degree in one variable; -1 for the zero polynomial.
  int degree_in(int var) const;

  /// Adds c * x^m in place, dropping the term if the sum cancels.
  void add_term(const Monomial& m, const Rational& c);

  /// Exact value at a rational point (one value per variable).
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Ring homomorphism substituting `replacement` for variable `var`;
  /// all other variables map to themselves.
  MultiPoly substitute(int var, const MultiPoly& replacement) const;

  /// Coefficient of var^power, returned with that variable's exponent
  /// zeroed out (still a polynomial in the full variable set).
  MultiPoly coefficient_in(int var, int power) const;

  /// Partial derivative with respect to one variable.
  MultiPoly partial(int var) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

 private:
  void check_var(int var) const;

  int nvars_ = 0;
  TermMap terms_;  // invariant: no zero coefficients stored
};

// ---- arithmetic ----

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly neg(const MultiPoly& a);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const MultiPoly& a, const Rational& c);
MultiPoly pow_int(const MultiPoly& a, int e);

inline MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return add(a, b); }
inline MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return sub(a, b); }
inline MultiPoly operator-(const MultiPoly& a) { return neg(a); }
inline MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return mul(a, b); }
inline MultiPoly operator*(const Rational& c, const MultiPoly& a) { return scale(a, c); }
inline MultiPoly operator*(const MultiPoly& a, const Rational& c) { return scale(a, c); }

// ---- rendering ----

/// Human-readable form using the supplied variable names, terms in the
/// map's monomial order; "0" for the zero polynomial.
std::string to_string(const MultiPoly& p, const std::vector<std::string>& names);

}  // namespace minmod
