#include "minmod/rational.hpp"

#include <limits>

namespace minmod {

Rational rat(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(Int(num), Int(den));
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty())
      throw std::invalid_argument("malformed rational literal");
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(Int(num), d);
  } catch (const std::runtime_error&) {
    // cpp_int rejects malformed digit strings with a runtime_error.
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string to_string(const Rational& r) { return r.str(); }

long long to_long(const Int& n) {
  if (n > std::numeric_limits<long long>::max() ||
      n < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer too large for machine word");
  return n.convert_to<long long>();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Int floor_int(const Rational& r) {
  const Int num = numerator(r), den = denominator(r);  // den > 0
  Int q = num / den;                                   // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

Int ceil_int(const Rational& r) { return -floor_int(-r); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Rational rational_pow(const Rational& base, long long e) {
  if (base == 0) {
    if (e <= 0) throw std::domain_error("0 raised to a non-positive power");
    return Rational(0);
  }
  const bool neg = e < 0;
  unsigned long long k = neg ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                             : static_cast<unsigned long long>(e);
  Rational acc(1), sq = base;
  while (k) {
    if (k & 1ULL) acc *= sq;
    sq *= sq;
    k >>= 1;
  }
  return neg ? Rational(1) / acc : acc;
}

Rational rational_sqrt(const Rational& r) {
  if (r < 0) throw std::domain_error("square root of a negative rational");
  const Int num = numerator(r), den = denominator(r);
  const Int sn = boost::multiprecision::sqrt(num);
  const Int sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den)
    throw std::domain_error("rational is not a perfect square");
  return Rational(sn, sd);
}

Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return Int(0);
  if (k > n - k) k = n - k;
  Int acc(1);
  for (long long i = 1; i <= k; ++i) {
    acc *= Int(n - k + i);
    acc /= Int(i);
  }
  return acc;
}

}  // namespace minmod
