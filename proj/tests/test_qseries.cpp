// Exercises the exact truncated q-series engine: canonical form, lattice
// merging, truncation-window bookkeeping, ring axioms against a naive
// sparse-map oracle, inversion, fractional powers and the Euler operator.

#include "minmod/qseries.hpp"

#include <map>
#include <random>
#include <vector>

#include "test_support.hpp"

using minmod::QSeries;
using minmod::Rational;
using minmod::rat;

namespace {

// ---- naive oracle: sparse exponent -> coefficient maps -----------------
// Independent of the library's lattice representation; products and sums
// are computed term by term and compared below a common exponent bound.

using Sparse = std::map<Rational, Rational>;

Sparse sparse_of(const QSeries& s) {
  Sparse m;
  for (std::size_t i = 0; i < s.coeffs().size(); ++i)
    if (s.coeffs()[i] != 0) m[s.exponent_at(i)] = s.coeffs()[i];
  return m;
}

Sparse sparse_mul(const Sparse& a, const Sparse& b, const Rational& bound) {
  Sparse out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      const Rational e = ea + eb;
      if (e < bound) out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Sparse sparse_add(const Sparse& a, const Sparse& b, const Rational& bound) {
  Sparse out;
  for (const auto& [e, c] : a)
    if (e < bound) out[e] += c;
  for (const auto& [e, c] : b)
    if (e < bound) out[e] += c;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Random series on a small lattice with nonzero leading coefficient.
QSeries random_series(std::mt19937& rng) {
  static const Rational offsets[] = {rat(0),      rat(1),      rat(-1),
                                     rat(1, 2),   rat(-1, 3),  rat(1, 24),
                                     rat(1, 40),  rat(-1, 60)};
  std::uniform_int_distribution<int> pick_off(0, 7), pick_step(1, 4),
      pick_len(1, 9), pick_coeff(-5, 5);
  const long long step = pick_step(rng);
  const int len = pick_len(rng);
  std::vector<Rational> c(static_cast<std::size_t>(len));
  for (auto& x : c) x = rat(pick_coeff(rng));
  if (c[0] == 0) c[0] = 1;
  const Rational off = offsets[pick_off(rng)];
  return QSeries::from_coeffs(off, step, c, off + rat(len + 2, step));
}

}  // namespace

int main() {
  SECTION("canonical form");
  {
    // Leading zeros advance the offset; trailing zeros are trimmed.
    QSeries s = QSeries::from_coeffs(rat(0), 2, {rat(0), rat(0), rat(3), rat(0)},
                                     rat(10));
    CHECK(!s.is_zero());
    CHECK_EQ(s.offset(), rat(1));
    CHECK_EQ(s.coeffs().size(), std::size_t{1});
    CHECK_EQ(s.step(), 1);  // single term: lattice collapses
    CHECK_EQ(s.trusted_below(), rat(10));

    // Only even slots occupied on a 1/4-lattice: step reduces to 2.
    QSeries t = QSeries::from_coeffs(
        rat(0), 4, {rat(1), rat(0), rat(5), rat(0), rat(7)}, rat(3));
    CHECK_EQ(t.step(), 2);
    CHECK_EQ(t.coeffs().size(), std::size_t{3});
    CHECK_EQ(t.coeff(rat(1, 2)), rat(5));
    CHECK_EQ(t.coeff(rat(1, 4)), rat(0));

    // All-zero coefficients give the canonical zero series.
    QSeries z = QSeries::from_coeffs(rat(5, 7), 3, {rat(0), rat(0)}, rat(4));
    CHECK(z.is_zero());
    CHECK_EQ(z.trusted_below(), rat(4));
    CHECK_EQ(z, QSeries::zero(rat(4)));

    // Slots at or beyond the trusted bound are discarded.
    QSeries u = QSeries::from_coeffs(rat(0), 1, {rat(1), rat(1), rat(9)}, rat(2));
    CHECK_EQ(u.coeffs().size(), std::size_t{2});
  }

  SECTION("lattice merge on addition");
  {
    // Offsets 1/40 and 9/40 differ by 1/5: the merged lattice must refine
    // both unit-step lattices by exactly that gap, i.e. step lcm(1,1,5)=5.
    QSeries a = QSeries::from_coeffs(rat(1, 40), 1, {rat(1), rat(0), rat(-1)},
                                     rat(161, 40));
    QSeries b = QSeries::from_coeffs(rat(9, 40), 1, {rat(1), rat(1)},
                                     rat(161, 40));
    QSeries s = add(a, b);
    CHECK_EQ(s.step(), 5);
    CHECK_EQ(s.offset(), rat(1, 40));
    CHECK_EQ(s.coeff(rat(9, 40)), rat(1));
    CHECK_EQ(s.coeff(rat(49, 40)), rat(1));  // 9/40 + 1
    CHECK_EQ(s.coeff(rat(81, 40)), rat(-1));  // 1/40 + 2
    CHECK_EQ(s.coeff(rat(41, 40)), rat(0));
    CHECK_EQ(s.trusted_below(), rat(161, 40));
  }

  SECTION("truncation window propagation");
  {
    // Product rule: trusted below min(off_a + T_b, off_b + T_a).
    QSeries a = QSeries::from_coeffs(rat(2), 1, {rat(1), rat(1)}, rat(9));
    QSeries b = QSeries::from_coeffs(rat(-1), 1, {rat(1), rat(4)}, rat(5));
    QSeries p = mul(a, b);
    CHECK_EQ(p.trusted_below(), rat(7));  // min(2+5, -1+9)
    CHECK_EQ(p.offset(), rat(1));
    CHECK_EQ(p.coeff(rat(2)), rat(5));

    // Sum rule: trusted below min(T_a, T_b).
    CHECK_EQ(add(a, b).trusted_below(), rat(5));

    // Multiplication by a zero series keeps the O(q^T) bookkeeping.
    QSeries z = QSeries::zero(rat(3));
    CHECK(mul(z, b).is_zero());
    CHECK_EQ(mul(z, b).trusted_below(), rat(2));  // -1 + 3
  }

  SECTION("ring axioms against the sparse oracle");
  {
    std::mt19937 rng(20260825u);
    for (int iter = 0; iter < 60; ++iter) {
      QSeries a = random_series(rng), b = random_series(rng),
              c = random_series(rng);

      QSeries ab = mul(a, b);
      CHECK(agree(ab, mul(b, a)));
      CHECK_EQ(sparse_of(ab),
               sparse_mul(sparse_of(a), sparse_of(b), ab.trusted_below()));

      QSeries s = add(a, b);
      CHECK_EQ(sparse_of(s),
               sparse_add(sparse_of(a), sparse_of(b), s.trusted_below()));
      CHECK(agree(add(add(a, b), c), add(a, add(b, c))));

      // Distributivity, compared on the common trusted window.
      CHECK(agree(mul(a, add(b, c)), add(mul(a, b), mul(a, c))));

      // a - a is the canonical zero with the right window.
      QSeries d = sub(a, a);
      CHECK(d.is_zero());
      CHECK_EQ(d.trusted_below(), a.trusted_below());

      // Euler operator is a derivation.
      CHECK(agree(derive_q(ab),
                  add(mul(derive_q(a), b), mul(a, derive_q(b)))));
    }
  }

  SECTION("inversion");
  {
    std::mt19937 rng(77u);
    for (int iter = 0; iter < 30; ++iter) {
      QSeries a = random_series(rng);
      QSeries inv = invert(a);
      QSeries one = mul(a, inv);
      CHECK_EQ(one.offset(), rat(0));
      CHECK_EQ(one.leading_coeff(), rat(1));
      CHECK_EQ(one.coeffs().size(), std::size_t{1});  // exactly 1 + nothing
      CHECK(agree(invert(inv), a));
    }
    // Window: inverse of q^k * unit keeps the relative length.
    QSeries g = QSeries::from_coeffs(rat(2), 1, {rat(3), rat(1)}, rat(7));
    CHECK_EQ(invert(g).trusted_below(), rat(3));  // 7 - 2*2
    CHECK_EQ(invert(g).offset(), rat(-2));
    CHECK_THROWS(invert(QSeries::zero(rat(5))), minmod::ZeroLeadingCoefficient);

    // Geometric series: 1/(1-q) = 1 + q + q^2 + ...
    QSeries geom = invert(
        QSeries::from_coeffs(rat(0), 1, {rat(1), rat(-1)}, rat(6)));
    for (int n = 0; n < 6; ++n) CHECK_EQ(geom.coeff(rat(n)), rat(1));
  }

  SECTION("integer and fractional powers");
  {
    QSeries f = QSeries::from_coeffs(rat(0), 1, {rat(1), rat(1)}, rat(8));
    // (1+q)^(1/2) squared reproduces 1+q.
    QSeries h = pow_rational(f, rat(1, 2));
    CHECK(agree(mul(h, h), f));
    CHECK_EQ(h.coeff(rat(1)), rat(1, 2));
    CHECK_EQ(h.coeff(rat(2)), rat(-1, 8));
    // (1+q)^(-1) by the binomial route matches invert().
    CHECK(agree(pow_rational(f, rat(-1)), invert(f)));

    // Fractional power moves the leading exponent: (q^(1/2)(1+q))^(1/3).
    QSeries g = QSeries::from_coeffs(rat(1, 2), 1, {rat(1), rat(1)}, rat(13, 2));
    QSeries gr = pow_rational(g, rat(1, 3));
    CHECK_EQ(gr.offset(), rat(1, 6));
    CHECK_EQ(gr.trusted_below(), rat(1, 6) + rat(6));  // relative window kept
    CHECK(agree(pow_int(gr, 3), g));

    // Non-unit leading coefficient only obstructs fractional exponents.
    QSeries n2 = QSeries::from_coeffs(rat(0), 1, {rat(2), rat(1)}, rat(6));
    CHECK_THROWS(pow_rational(n2, rat(1, 2)), minmod::NonUnitLeading);
    CHECK(agree(pow_rational(n2, rat(2)), mul(n2, n2)));
    CHECK(agree(mul(pow_int(n2, -2), mul(n2, n2)),
                QSeries::monomial(1, 0, rat(4))));

    std::mt19937 rng(99u);
    for (int iter = 0; iter < 20; ++iter) {
      QSeries a = random_series(rng);
      // Force unit leading coefficient.
      QSeries u = scale(Rational(1) / a.leading_coeff(), a);
      QSeries r = pow_rational(u, rat(2, 3));
      CHECK(agree(pow_int(r, 3), pow_int(u, 2)));
    }
  }

  SECTION("euler operator");
  {
    QSeries m = QSeries::monomial(rat(7), rat(-3, 5), rat(4));
    QSeries dm = derive_q(m);
    CHECK_EQ(dm.coeff(rat(-3, 5)), rat(-21, 5));
    // Constants are annihilated and stay canonical zero.
    CHECK(derive_q(QSeries::monomial(rat(5), rat(0), rat(9))).is_zero());
  }

  SECTION("coefficient access and windows");
  {
    QSeries a = QSeries::from_coeffs(rat(1, 24), 1, {rat(1), rat(-1)}, rat(49, 24));
    CHECK_EQ(a.coeff(rat(25, 24)), rat(-1));
    CHECK_EQ(a.coeff(rat(1, 2)), rat(0));       // off-lattice but trusted
    CHECK_THROWS(a.coeff(rat(49, 24)), std::out_of_range);
    CHECK_THROWS(a.coeff(rat(3)), std::out_of_range);

    QSeries t = truncate(a, rat(1));
    CHECK_EQ(t.trusted_below(), rat(1));
    CHECK_EQ(t.coeffs().size(), std::size_t{1});

    CHECK(is_zero_below(sub(a, a), rat(100)));
    CHECK(!is_zero_below(a, rat(2)));

    QSeries sh = shift(a, rat(-1, 24));
    CHECK_EQ(sh.offset(), rat(0));
    CHECK_EQ(sh.trusted_below(), rat(2));
  }

  return testkit::summary("test_qseries");
}
