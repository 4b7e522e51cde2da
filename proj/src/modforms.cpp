#include "minmod/modforms.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace minmod {

namespace {

// sigma_{p}(n) for n = 1..terms-1, accumulated over multiples.
std::vector<Int> divisor_power_sums(int p, long long terms) {
  std::vector<Int> sigma(static_cast<std::size_t>(std::max<long long>(terms, 1)));
  for (long long d = 1; d < terms; ++d) {
    Int dp(1);
    for (int i = 0; i < p; ++i) dp *= d;
    for (long long n = d; n < terms; n += d)
      sigma[static_cast<std::size_t>(n)] += dp;
  }
  return sigma;
}

// prod_{n=1..terms-1} (1 - q^n) as a dense integer-lattice polynomial,
// exact below `terms`.
std::vector<Rational> euler_product(long long terms) {
  std::vector<Rational> v(static_cast<std::size_t>(terms));
  v[0] = 1;
  for (long long n = 1; n < terms; ++n)
    for (long long i = terms - 1; i >= n; --i)
      v[static_cast<std::size_t>(i)] -= v[static_cast<std::size_t>(i - n)];
  return v;
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw std::domain_error("Bernoulli index must be non-negative");
  static std::mutex mu;
  static std::map<int, Rational> cache{{0, Rational(1)}};
  const std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  for (int m = 1; m <= n; ++m) {
    if (cache.count(m)) continue;
    // sum_{j=0..m} C(m+1, j) B_j = 0  =>  solve for B_m.
    Rational acc(0);
    for (int j = 0; j < m; ++j)
      acc += Rational(binomial(m + 1, j)) * cache.at(j);
    cache[m] = -acc / Rational(binomial(m + 1, m));
  }
  return cache.at(n);
}

QSeries eisenstein(int k, long long terms) {
  if (k < 2 || k % 2 != 0)
    throw InvalidWeight("Eisenstein weight must be even and >= 2, got " +
                        std::to_string(k));
  const Rational factor = Rational(-2 * k) / bernoulli(k);
  const auto sigma = divisor_power_sums(k - 1, terms);
  std::vector<Rational> c(static_cast<std::size_t>(std::max<long long>(terms, 1)));
  c[0] = 1;
  for (long long n = 1; n < terms; ++n)
    c[static_cast<std::size_t>(n)] =
        factor * Rational(sigma[static_cast<std::size_t>(n)]);
  return QSeries::from_coeffs(0, 1, std::move(c), Rational(terms));
}

QSeries eta(long long terms) {
  return shift(QSeries::from_coeffs(0, 1, euler_product(terms), Rational(terms)),
               rat(1, 24));
}

QSeries delta(long long terms) {
  // eta^24; the window composes to exactly [1, 1 + terms).
  return pow_int(eta(terms), 24);
}

QSeries jfunction(long long terms) {
  const long long t = terms + 2;
  const QSeries e4 = eisenstein(4, t), e6 = eisenstein(6, t);
  const QSeries num = scale(1728, pow_int(e4, 3));
  const QSeries den = sub(pow_int(e4, 3), pow_int(e6, 2));  // 1728 q (1 + ...)
  return truncate(mul(num, invert(den)), Rational(terms - 1));
}

QSeries theta5(int k, long long terms) {
  if (k != 1 && k != 2)
    throw InvalidWeight("theta5 index must be 1 or 2, got " + std::to_string(k));
  const long long c = 2 * k - 1;
  const Rational lead = rat(c * c, 40);
  const Rational bound = lead + terms;
  // Signed sum over j in Z of (-1)^j q^((10j+c)^2/40); exponent gaps are
  // integers, so the series lives on the unit lattice above q^(c^2/40).
  std::map<Rational, Rational> acc;
  for (long long j = 0;; ++j) {
    const Rational ep = rat((10 * j + c) * (10 * j + c), 40);
    const Rational em = rat((10 * j - c) * (10 * j - c), 40);
    if (ep >= bound && em >= bound) break;
    const Rational sign = (j % 2 == 0) ? 1 : -1;
    if (ep < bound) acc[ep] += sign;
    if (j > 0 && em < bound) acc[em] += sign;  // the -j term, same parity
  }
  std::vector<Rational> coeffs(
      static_cast<std::size_t>(lattice_count(lead, 1, bound)));
  for (const auto& [e, v] : acc)
    coeffs[static_cast<std::size_t>(to_long(numerator(Rational(e - lead))))] = v;
  return QSeries::from_coeffs(lead, 1, std::move(coeffs), bound);
}

QSeries rcf(long long terms) {
  // q^(1/5) prod (1-q^n)^chi(n), chi the quadratic character mod 5.
  std::vector<Rational> plus(static_cast<std::size_t>(terms)),
      minus(static_cast<std::size_t>(terms));
  plus[0] = minus[0] = 1;
  for (long long n = 1; n < terms; ++n) {
    const long long res = n % 5;
    std::vector<Rational>* target = nullptr;
    if (res == 1 || res == 4) target = &plus;
    if (res == 2 || res == 3) target = &minus;
    if (!target) continue;
    for (long long i = terms - 1; i >= n; --i)
      (*target)[static_cast<std::size_t>(i)] -=
          (*target)[static_cast<std::size_t>(i - n)];
  }
  const QSeries p = QSeries::from_coeffs(0, 1, std::move(plus), Rational(terms));
  const QSeries m = QSeries::from_coeffs(0, 1, std::move(minus), Rational(terms));
  return shift(mul(p, invert(m)), rat(1, 5));
}

Rational weight_of(FormName name) {
  switch (name) {
    case FormName::E2: return 2;
    case FormName::E4: return 4;
    case FormName::E6: return 6;
    case FormName::E12: return 12;
    case FormName::Delta: return 12;
    case FormName::Eta: return rat(1, 2);
    case FormName::Theta51: return rat(1, 2);
    case FormName::Theta52: return rat(1, 2);
    case FormName::J: return 0;
    case FormName::RCF: return 0;
  }
  throw std::logic_error("unreachable form name");
}

QSeries form(FormName name, long long terms) {
  switch (name) {
    case FormName::E2: return eisenstein(2, terms);
    case FormName::E4: return eisenstein(4, terms);
    case FormName::E6: return eisenstein(6, terms);
    case FormName::E12: return eisenstein(12, terms);
    case FormName::Delta: return delta(terms);
    case FormName::Eta: return eta(terms);
    case FormName::Theta51: return theta5(1, terms);
    case FormName::Theta52: return theta5(2, terms);
    case FormName::J: return jfunction(terms);
    case FormName::RCF: return rcf(terms);
  }
  throw std::logic_error("unreachable form name");
}

FormCatalogEntry catalog_entry(FormName name, long long terms) {
  return FormCatalogEntry{name, weight_of(name), form(name, terms)};
}

const char* form_name_string(FormName name) {
  switch (name) {
    case FormName::E2: return "E2";
    case FormName::E4: return "E4";
    case FormName::E6: return "E6";
    case FormName::E12: return "E12";
    case FormName::Delta: return "Delta";
    case FormName::Eta: return "Eta";
    case FormName::Theta51: return "Theta51";
    case FormName::Theta52: return "Theta52";
    case FormName::J: return "J";
    case FormName::RCF: return "RCF";
  }
  throw std::logic_error("unreachable form name");
}

FormName parse_form_name(const std::string& text) {
  static const std::map<std::string, FormName> names = {
      {"E2", FormName::E2},        {"E4", FormName::E4},
      {"E6", FormName::E6},        {"E12", FormName::E12},
      {"Delta", FormName::Delta},  {"Eta", FormName::Eta},
      {"Theta51", FormName::Theta51}, {"Theta52", FormName::Theta52},
      {"J", FormName::J},          {"RCF", FormName::RCF}};
  auto it = names.find(text);
  if (it == names.end())
    throw std::invalid_argument("unknown form name: " + text);
  return it->second;
}

QSeries serre(const QSeries& f, const Rational& weight) {
  if (f.is_zero()) return f;
  const long long need =
      to_long(ceil_int(f.trusted_below() - f.offset())) + 1;
  const QSeries e2 = eisenstein(2, std::max<long long>(need, 1));
  return sub(derive_q(f), scale(weight / 12, mul(e2, f)));
}

QSeries serre_tower(const QSeries& f, int m) {
  if (m < 0) throw std::domain_error("serre_tower order must be >= 0");
  QSeries out = f;
  for (int l = 0; l < m; ++l) out = serre(out, Rational(2 * l));
  return out;
}

}  // namespace minmod
