/// @file multipoly.cpp
/// @brief Sparse multivariate polynomial arithmetic (see multipoly.hpp).

#include "minmod/multipoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace minmod {

namespace {

void check_same_space(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument(
        "MultiPoly: operands live in different variable counts (" +
        std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + ")");
  }
}

}  // namespace

// ---- construction ----

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) {
    throw std::invalid_argument("MultiPoly: negative variable count");
  }
}

MultiPoly MultiPoly::constant(int nvars, const Rational& value) {
  MultiPoly p(nvars);
  p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), value);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  MultiPoly p(nvars);
  p.check_var(index);
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m[static_cast<std::size_t>(index)] = 1;
  p.add_term(m, Rational(1));
  return p;
}

void MultiPoly::check_var(int var) const {
  if (var < 0 || var >= nvars_) {
    throw std::invalid_argument("MultiPoly: variable index " +
                                std::to_string(var) + " out of range");
  }
}

// ---- term access ----

Rational MultiPoly::coefficient(const Monomial& m) const {
  if (m.size() != static_cast<std::size_t>(nvars_)) {
    throw std::invalid_argument("MultiPoly: monomial length mismatch");
  }
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (int e : m) d += e;
    if (d > best) best = d;
  }
  return best;
}

int MultiPoly::degree_in(int var) const {
  check_var(var);
  int best = -1;
  for (const auto& [m, c] : terms_) {
    const int e = m[static_cast<std::size_t>(var)];
    if (e > best) best = e;
  }
  return best;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != static_cast<std::size_t>(nvars_)) {
    throw std::invalid_argument("MultiPoly: monomial length mismatch");
  }
  for (int e : m) {
    if (e < 0) throw std::invalid_argument("MultiPoly: negative exponent");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = Rational(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }
}

// ---- evaluation and substitution ----

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != static_cast<std::size_t>(nvars_)) {
    throw std::invalid_argument("MultiPoly: evaluation point length mismatch");
  }
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) term = Rational(term * rational_pow(point[i], m[i]));
    }
    acc = Rational(acc + term);
  }
  return acc;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& replacement) const {
  check_var(var);
  check_same_space(*this, replacement);
  const std::size_t v = static_cast<std::size_t>(var);

  // Cache replacement^e for every exponent that actually occurs.
  const int top = degree_in(var);
  std::vector<MultiPoly> powers;
  powers.reserve(static_cast<std::size_t>(top < 0 ? 0 : top) + 1);
  powers.push_back(MultiPoly::constant(nvars_, Rational(1)));
  for (int e = 1; e <= top; ++e) powers.push_back(mul(powers.back(), replacement));

  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    const int e = m[v];
    Monomial rest = m;
    rest[v] = 0;
    MultiPoly piece(nvars_);
    piece.add_term(rest, c);
    out = add(out, mul(piece, powers[static_cast<std::size_t>(e)]));
  }
  return out;
}

MultiPoly MultiPoly::coefficient_in(int var, int power) const {
  check_var(var);
  if (power < 0) throw std::invalid_argument("MultiPoly: negative exponent");
  const std::size_t v = static_cast<std::size_t>(var);
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[v] != power) continue;
    Monomial rest = m;
    rest[v] = 0;
    out.add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::partial(int var) const {
  check_var(var);
  const std::size_t v = static_cast<std::size_t>(var);
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    const int e = m[v];
    if (e == 0) continue;
    Monomial down = m;
    down[v] = e - 1;
    out.add_term(down, Rational(c * e));
  }
  return out;
}

// ---- arithmetic ----

MultiPoly add(const MultiPoly& a, const MultiPoly& b) {
  check_same_space(a, b);
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

MultiPoly sub(const MultiPoly& a, const MultiPoly& b) {
  check_same_space(a, b);
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, Rational(-c));
  return out;
}

MultiPoly neg(const MultiPoly& a) {
  MultiPoly out(a.nvars());
  for (const auto& [m, c] : a.terms()) out.add_term(m, Rational(-c));
  return out;
}

MultiPoly mul(const MultiPoly& a, const MultiPoly& b) {
  check_same_space(a, b);
  MultiPoly out(a.nvars());
  const std::size_t n = static_cast<std::size_t>(a.nvars());
  MultiPoly::Monomial sum(n, 0);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      for (std::size_t i = 0; i < n; ++i) sum[i] = ma[i] + mb[i];
      out.add_term(sum, Rational(ca * cb));
    }
  }
  return out;
}

MultiPoly scale(const MultiPoly& a, const Rational& c) {
  MultiPoly out(a.nvars());
  if (c == 0) return out;
  for (const auto& [m, k] : a.terms()) out.add_term(m, Rational(k * c));
  return out;
}

MultiPoly pow_int(const MultiPoly& a, int e) {
  if (e < 0) throw std::invalid_argument("MultiPoly: negative power");
  MultiPoly acc = MultiPoly::constant(a.nvars(), Rational(1));
  for (int i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

// ---- rendering ----

std::string to_string(const MultiPoly& p, const std::vector<std::string>& names) {
  if (names.size() != static_cast<std::size_t>(p.nvars())) {
    throw std::invalid_argument("MultiPoly: name list length mismatch");
  }
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool printed = false;
    if (mag != 1) {
      os << mag;
      printed = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) os << "*";
      os << names[i];
      if (m[i] > 1) os << "^" << m[i];
      printed = true;
    }
    if (!printed) os << mag;  // bare unit coefficient
  }
  return os.str();
}

}  // namespace minmod
