#include "minmod/polynomial.hpp"

#include <sstream>

namespace minmod {

// ---- construction ------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::variable() {
  return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial p = constant(Rational(1));
  for (const Rational& r : roots) {
    p = mul(p, Polynomial(std::vector<Rational>{-r, Rational(1)}));
  }
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(long long i) const {
  if (i < 0 || i >= static_cast<long long>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = Rational(acc * x + *it);
  return acc;
}

// ---- arithmetic --------------------------------------------------------

Polynomial add(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out.c_[i] += b.c_[i];
  out.trim();
  return out;
}

Polynomial sub(const Polynomial& a, const Polynomial& b) { return add(a, neg(b)); }

Polynomial neg(const Polynomial& a) { return scale(Rational(-1), a); }

Polynomial mul(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.resize(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out.c_[i + j] += Rational(a.c_[i] * b.c_[j]);
    }
  }
  out.trim();
  return out;
}

Polynomial scale(const Rational& c, const Polynomial& a) {
  Polynomial out;
  if (c == 0) return out;
  out.c_.reserve(a.c_.size());
  for (const Rational& x : a.c_) out.c_.push_back(Rational(c * x));
  out.trim();
  return out;
}

Polynomial derivative(const Polynomial& a) {
  Polynomial out;
  if (a.c_.size() <= 1) return out;
  out.c_.resize(a.c_.size() - 1, Rational(0));
  for (std::size_t i = 1; i < a.c_.size(); ++i) {
    out.c_[i - 1] = Rational(Rational(static_cast<long long>(i)) * a.c_[i]);
  }
  out.trim();
  return out;
}

// ---- rendering ---------------------------------------------------------

std::string to_string(const Polynomial& a, const char* var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long long i = a.degree(); i >= 0; --i) {
    Rational c = a.coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) {
        os << "-";
        c = Rational(-c);
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = Rational(-c);
    }
    const bool unit = (c == 1);
    if (i == 0) {
      os << to_string(c);
    } else {
      if (!unit) os << to_string(c) << " ";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& a) {
  return os << to_string(a);
}

}  // namespace minmod
