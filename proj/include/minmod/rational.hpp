/// @file rational.hpp
/// @brief Exact scalar arithmetic used throughout the library.
///
/// All exact computation is done over arbitrary-precision rationals
/// (Boost.Multiprecision).  Values are kept canonical by the backend:
/// always reduced, denominator positive.  This header adds the small
/// set of helpers the rest of the library needs on top of the raw
/// number type: parsing/printing in decimal-free "p/q" form, integer
/// floor/ceil, exact powers and square roots, and checked narrowing.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace minmod {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---- construction / conversion ----------------------------------------

/// num/den as an exact rational; throws std::domain_error if den == 0.
Rational rat(long long num, long long den = 1);

/// Parse "p" or "p/q" (optional leading '-'); throws std::invalid_argument
/// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Decimal-free rendering: "p" when integral, "p/q" otherwise (q > 1).
std::string to_string(const Rational& r);

/// Checked narrowing to a machine integer; throws std::overflow_error.
long long to_long(const Int& n);

/// Nearest double (numeric layer only; exact layers never round).
double to_double(const Rational& r);

// ---- integer-valued operations ----------------------------------------

/// Largest integer <= r.
Int floor_int(const Rational& r);

/// Smallest integer >= r.
Int ceil_int(const Rational& r);

/// True iff r has denominator 1.
bool is_integer(const Rational& r);

// ---- exact powers ------------------------------------------------------

/// r^e with integer e (negative e inverts; 0^e throws std::domain_error
/// for e <= 0 ... 0^0 included).
Rational rational_pow(const Rational& base, long long e);

/// Exact square root; throws std::domain_error unless r is the square
/// of a rational (in particular for r < 0).
Rational rational_sqrt(const Rational& r);

/// Binomial coefficient C(n, k) as an exact integer (0 for k < 0 or k > n).
Int binomial(long long n, long long k);

}  // namespace minmod
