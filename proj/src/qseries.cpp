#include "minmod/qseries.hpp"

#include <boost/multiprecision/integer.hpp>

#include <numeric>
#include <ostream>
#include <sstream>

namespace minmod {

namespace {

long long lcm_ll(long long a, long long b) {
  return to_long(boost::multiprecision::lcm(Int(a), Int(b)));
}

// Integer value of r, which must be integral (lattice bookkeeping only).
long long exact_ll(const Rational& r) {
  if (!is_integer(r)) throw std::logic_error("lattice index is not integral");
  return to_long(numerator(r));
}

}  // namespace

long long lattice_count(const Rational& offset, long long step,
                        const Rational& bound) {
  if (offset >= bound) return 0;
  return to_long(ceil_int((bound - offset) * step));
}

// ---- canonical form ----------------------------------------------------

void QSeries::canonicalize() {
  if (step_ < 1) throw std::invalid_argument("series step must be positive");
  // Discard slots at or beyond the trusted bound.
  const long long keep = lattice_count(offset_, step_, trusted_);
  if (static_cast<long long>(coeffs_.size()) > keep)
    coeffs_.resize(static_cast<std::size_t>(std::max<long long>(keep, 0)));
  // Trim leading zeros, advancing the offset.
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    offset_ += Rational(Int(lead), Int(step_));
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) {
    offset_ = 0;
    step_ = 1;
    return;
  }
  // Minimal lattice: divide out the gcd of step and the nonzero indices.
  long long g = step_;
  for (std::size_t i = 1; i < coeffs_.size() && g > 1; ++i)
    if (coeffs_[i] != 0) g = std::gcd(g, static_cast<long long>(i));
  if (g > 1) {
    std::vector<Rational> packed((coeffs_.size() - 1) / g + 1);
    for (std::size_t i = 0; i < coeffs_.size(); i += g)
      packed[i / g] = coeffs_[i];
    coeffs_ = std::move(packed);
    step_ /= g;
  }
}

// ---- constructors ------------------------------------------------------

QSeries QSeries::zero(const Rational& trusted) {
  QSeries s;
  s.trusted_ = trusted;
  return s;
}

QSeries QSeries::monomial(const Rational& c, const Rational& e,
                          const Rational& trusted) {
  QSeries s;
  s.offset_ = e;
  s.step_ = 1;
  s.trusted_ = trusted;
  if (c != 0) s.coeffs_.assign(1, c);
  s.canonicalize();
  return s;
}

QSeries QSeries::from_coeffs(const Rational& offset, long long step,
                             std::vector<Rational> coeffs,
                             const Rational& trusted) {
  QSeries s;
  s.offset_ = offset;
  s.step_ = step;
  s.coeffs_ = std::move(coeffs);
  s.trusted_ = trusted;
  s.canonicalize();
  return s;
}

// ---- accessors ---------------------------------------------------------

const Rational& QSeries::offset() const {
  if (is_zero()) throw std::logic_error("zero series has no leading exponent");
  return offset_;
}

const Rational& QSeries::leading_coeff() const {
  if (is_zero()) throw std::logic_error("zero series has no leading term");
  return coeffs_.front();
}

Rational QSeries::exponent_at(std::size_t n) const {
  return offset_ + Rational(Int(n), Int(step_));
}

Rational QSeries::coeff(const Rational& e) const {
  if (e >= trusted_)
    throw std::out_of_range("coefficient request at exponent " + to_string(e) +
                            " beyond trusted bound " + to_string(trusted_));
  if (is_zero()) return 0;
  const Rational t = (e - offset_) * step_;
  if (t < 0 || !is_integer(t)) return 0;
  const long long idx = to_long(numerator(t));
  if (idx >= static_cast<long long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

// ---- arithmetic --------------------------------------------------------

QSeries add(const QSeries& a, const QSeries& b) {
  const Rational bound = std::min(a.trusted_, b.trusted_);
  if (a.is_zero()) return truncate(b, bound);
  if (b.is_zero()) return truncate(a, bound);
  long long n = lcm_ll(a.step_, b.step_);
  const Rational diff = a.offset_ - b.offset_;
  n = lcm_ll(n, to_long(denominator(diff)));
  const Rational base = std::min(a.offset_, b.offset_);
  const long long len = lattice_count(base, n, bound);
  std::vector<Rational> out(static_cast<std::size_t>(std::max<long long>(len, 0)));
  for (const QSeries* src : {&a, &b}) {
    const long long start = exact_ll((src->offset_ - base) * n);
    const long long stride = n / src->step_;
    for (std::size_t i = 0; i < src->coeffs_.size(); ++i) {
      const long long idx = start + static_cast<long long>(i) * stride;
      if (idx >= len) break;
      out[static_cast<std::size_t>(idx)] += src->coeffs_[i];
    }
  }
  return QSeries::from_coeffs(base, n, std::move(out), bound);
}

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, neg(b)); }

QSeries neg(const QSeries& a) { return scale(Rational(-1), a); }

QSeries mul(const QSeries& a, const QSeries& b) {
  const Rational bound =
      std::min(a.low_bound() + b.trusted_below(), b.low_bound() + a.trusted_below());
  if (a.is_zero() || b.is_zero()) return QSeries::zero(bound);
  const long long n = lcm_ll(a.step_, b.step_);
  const long long sa = n / a.step_, sb = n / b.step_;
  const Rational off = a.offset_ + b.offset_;
  const long long len = lattice_count(off, n, bound);
  std::vector<Rational> out(static_cast<std::size_t>(std::max<long long>(len, 0)));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    const long long base = static_cast<long long>(i) * sa;
    if (base >= len) break;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      const long long idx = base + static_cast<long long>(j) * sb;
      if (idx >= len) break;
      out[static_cast<std::size_t>(idx)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QSeries::from_coeffs(off, n, std::move(out), bound);
}

QSeries invert(const QSeries& a) {
  if (a.is_zero())
    throw ZeroLeadingCoefficient("cannot invert a series that vanishes on its trusted window");
  const long long len = lattice_count(a.offset_, a.step_, a.trusted_);
  auto at = [&](long long k) -> Rational {
    return k < static_cast<long long>(a.coeffs_.size())
               ? a.coeffs_[static_cast<std::size_t>(k)]
               : Rational(0);
  };
  const Rational c0 = a.coeffs_.front();
  std::vector<Rational> w(static_cast<std::size_t>(len));
  w[0] = Rational(1) / c0;
  for (long long m = 1; m < len; ++m) {
    Rational s(0);
    for (long long k = 1; k <= m; ++k) {
      const Rational uk = at(k);
      if (uk != 0) s += uk * w[static_cast<std::size_t>(m - k)];
    }
    w[static_cast<std::size_t>(m)] = -s / c0;
  }
  return QSeries::from_coeffs(-a.offset_, a.step_, std::move(w),
                              a.trusted_ - 2 * a.offset_);
}

QSeries pow_int(const QSeries& a, long long e) {
  if (a.is_zero()) {
    if (e <= 0)
      throw ZeroLeadingCoefficient("non-positive power of the zero series");
    return QSeries::zero(Rational(e) * a.trusted_below());
  }
  if (e == 0)
    return QSeries::monomial(1, 0, a.trusted_below() - a.offset());
  if (e < 0) return pow_int(invert(a), -e);
  QSeries acc, sq = a;
  bool have = false;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1ULL) {
      acc = have ? mul(acc, sq) : sq;
      have = true;
    }
    k >>= 1;
    if (k) sq = mul(sq, sq);
  }
  return acc;
}

QSeries pow_rational(const QSeries& a, const Rational& e) {
  if (is_integer(e)) return pow_int(a, to_long(numerator(e)));
  if (a.is_zero()) {
    if (e > 0) return QSeries::zero(e * a.trusted_below());
    throw ZeroLeadingCoefficient("non-positive power of the zero series");
  }
  if (a.leading_coeff() != 1)
    throw NonUnitLeading("fractional power requires leading coefficient 1, got " +
                         to_string(a.leading_coeff()));
  const long long len = lattice_count(a.offset_, a.step_, a.trusted_);
  auto at = [&](long long k) -> Rational {
    return k < static_cast<long long>(a.coeffs_.size())
               ? a.coeffs_[static_cast<std::size_t>(k)]
               : Rational(0);
  };
  // g = u^e for the unit part u = 1 + ...: from u g' = e u' g,
  //   n g_n = sum_{k=1..n} ((e+1)k - n) u_k g_{n-k}.
  std::vector<Rational> g(static_cast<std::size_t>(len));
  g[0] = 1;
  for (long long m = 1; m < len; ++m) {
    Rational s(0);
    for (long long k = 1; k <= m; ++k) {
      const Rational uk = at(k);
      if (uk != 0)
        s += ((e + 1) * k - m) * uk * g[static_cast<std::size_t>(m - k)];
    }
    g[static_cast<std::size_t>(m)] = s / m;
  }
  const Rational off = e * a.offset_;
  return QSeries::from_coeffs(off, a.step_, std::move(g),
                              off + (a.trusted_ - a.offset_));
}

QSeries derive_q(const QSeries& a) {
  if (a.is_zero()) return a;
  std::vector<Rational> c(a.coeffs());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) c[i] *= a.exponent_at(i);
  return QSeries::from_coeffs(a.offset(), a.step(), std::move(c),
                              a.trusted_below());
}

QSeries scale(const Rational& c, const QSeries& a) {
  if (c == 0 || a.is_zero()) return QSeries::zero(a.trusted_below());
  std::vector<Rational> out(a.coeffs());
  for (auto& x : out) x *= c;
  return QSeries::from_coeffs(a.offset(), a.step(), std::move(out),
                              a.trusted_below());
}

QSeries shift(const QSeries& a, const Rational& e) {
  if (a.is_zero()) return QSeries::zero(a.trusted_below() + e);
  return QSeries::from_coeffs(a.offset() + e, a.step(), a.coeffs(),
                              a.trusted_below() + e);
}

QSeries truncate(const QSeries& a, const Rational& bound) {
  const Rational nb = std::min(a.trusted_below(), bound);
  if (a.is_zero()) return QSeries::zero(nb);
  return QSeries::from_coeffs(a.offset(), a.step(), a.coeffs(), nb);
}

// ---- comparison / printing --------------------------------------------

bool agree(const QSeries& a, const QSeries& b) {
  const Rational t = std::min(a.trusted_below(), b.trusted_below());
  return truncate(a, t) == truncate(b, t);
}

bool is_zero_below(const QSeries& a, const Rational& bound) {
  return truncate(a, bound).is_zero();
}

std::string to_string(const QSeries& a) {
  std::ostringstream os;
  auto put_exp = [&](const Rational& e) {
    if (e == 1) {
      os << "q";
    } else if (is_integer(e) && e > 0) {
      os << "q^" << to_string(e);
    } else {
      os << "q^(" << to_string(e) << ")";
    }
  };
  bool first = true;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < a.coeffs().size() && shown < 16; ++i) {
    const Rational& c = a.coeffs()[i];
    if (c == 0) continue;
    const Rational e = a.exponent_at(i);
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << "*";
      put_exp(e);
    }
    ++shown;
  }
  if (first) os << "0";
  if (shown == 16) os << " + ...";
  os << " + O(";
  put_exp(a.trusted_below());
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSeries& a) {
  return os << to_string(a);
}

}  // namespace minmod
