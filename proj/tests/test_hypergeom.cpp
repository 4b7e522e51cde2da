/// @file test_hypergeom.cpp
/// @brief Tests for the hypergeometric gauge reduction and exact series.
///
/// Every literal below was derived by hand from the three defining
/// relations and the Gauss recurrence before being pinned here: the
/// parameter triples (3/10, -1/10; 3/5) and (7/10, 11/10; 7/5), the series
/// heads 1, -1/20, -117/6400, -1311/128000 and 1, 11/20, 1309/3200, the
/// second-solution heads 3/20 and 7/20, and the gauge exponents -3/20 and
/// -11/20.  Independent cross-checks go through the q-series engine:
/// Euler's transformation F(A,B;C) = (1-z)^(C-A-B) F(C-A,C-B;C) and the
/// binomial value F(A,B;B) = (1-z)^(-A) tie the recurrence to fractional
/// powers computed by entirely separate code.

#include "minmod/hypergeom.hpp"
#include "minmod/polynomial.hpp"
#include "minmod/qseries.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "test_support.hpp"

using minmod::DegenerateParameters;
using minmod::HypergeomParams;
using minmod::InvalidK;
using minmod::Polynomial;
using minmod::QSeries;
using minmod::Rational;
using minmod::SeriesSolution;

namespace {

// Builds a z-power series on the unit lattice from dense coefficients,
// trusted through the given exponent.
QSeries zs(std::vector<Rational> coeffs, long long trusted) {
  return QSeries::from_coeffs(Rational(0), 1, std::move(coeffs),
                              Rational(trusted));
}

QSeries series_to_qs(const SeriesSolution& s) {
  return zs(s.coefficients, static_cast<long long>(s.coefficients.size()));
}

}  // namespace

int main() {
  // ---- allowed gauge shifts -------------------------------------------
  SECTION("allowed gauge shifts");
  {
    const auto [k1, k2] = minmod::allowed_k();
    CHECK_EQ(k1, Rational(-7, 10));
    CHECK_EQ(k2, Rational(-11, 10));
    // Vieta data of k^2 + (9/5) k + 77/100.
    CHECK_EQ(Rational(k1 + k2), Rational(-9, 5));
    CHECK_EQ(Rational(k1 * k2), Rational(77, 100));
    CHECK_EQ(minmod::hypergeom_central_charge(), Rational(-22, 5));
    CHECK_EQ(minmod::double_pole_obstruction(k1), Rational(0));
    CHECK_EQ(minmod::double_pole_obstruction(k2), Rational(0));
    CHECK_EQ(minmod::double_pole_obstruction(Rational(0)),
             Rational(77, 100));
    CHECK_EQ(minmod::double_pole_obstruction(Rational(-1)),
             Rational(-3, 100));
    CHECK(minmod::is_hypergeometric_gauge(k1));
    CHECK(minmod::is_hypergeometric_gauge(k2));
    CHECK(!minmod::is_hypergeometric_gauge(Rational(0)));
    CHECK(!minmod::is_hypergeometric_gauge(Rational(-1)));
    // Overall prefactor exponent e(k) = -c/8 + k = 11/20 + k.
    CHECK_EQ(minmod::gauge_exponent(k1), Rational(-3, 20));
    CHECK_EQ(minmod::gauge_exponent(k2), Rational(-11, 20));
    CHECK_EQ(Rational(minmod::gauge_exponent(k1) -
                      minmod::gauge_exponent(k2)),
             Rational(2, 5));
  }

  // ---- parameter triples ----------------------------------------------
  SECTION("parameter triples from the defining relations");
  {
    const HypergeomParams p1 = minmod::params_for_k(Rational(-7, 10));
    CHECK_EQ(p1.A, Rational(3, 10));
    CHECK_EQ(p1.B, Rational(-1, 10));
    CHECK_EQ(p1.C, Rational(3, 5));
    CHECK_EQ(p1.k, Rational(-7, 10));
    CHECK(minmod::relations_hold(p1));

    const HypergeomParams p2 = minmod::params_for_k(Rational(-11, 10));
    CHECK_EQ(p2.A, Rational(7, 10));
    CHECK_EQ(p2.B, Rational(11, 10));
    CHECK_EQ(p2.C, Rational(7, 5));
    CHECK_EQ(p2.k, Rational(-11, 10));
    CHECK(minmod::relations_hold(p2));

    // Spot arithmetic: A B = 13c/40 - 2k and A + B = 2C - 1.
    CHECK_EQ(Rational(p1.A * p1.B), Rational(-3, 100));
    CHECK_EQ(Rational(p1.A + p1.B), Rational(1, 5));
    CHECK_EQ(Rational(p2.A * p2.B), Rational(77, 100));
    CHECK_EQ(Rational(p2.A + p2.B), Rational(9, 5));

    CHECK_THROWS(minmod::params_for_k(Rational(0)), InvalidK);
    CHECK_THROWS(minmod::params_for_k(Rational(1, 2)), InvalidK);
    CHECK_THROWS(minmod::params_for_k(Rational(7, 10)), InvalidK);
  }

  // ---- relation web is rigid ------------------------------------------
  SECTION("any single-field mutation breaks a relation");
  {
    const std::vector<Rational> deltas{Rational(1, 7), Rational(-2, 5),
                                       Rational(1), Rational(-1, 100)};
    for (const Rational& k : {Rational(-7, 10), Rational(-11, 10)}) {
      const HypergeomParams p = minmod::params_for_k(k);
      for (const Rational& d : deltas) {
        HypergeomParams m = p;
        m.A = Rational(m.A + d);
        CHECK(!minmod::relations_hold(m));
        m = p;
        m.B = Rational(m.B + d);
        CHECK(!minmod::relations_hold(m));
        m = p;
        m.C = Rational(m.C + d);
        CHECK(!minmod::relations_hold(m));
        m = p;
        m.k = Rational(m.k + d);  // -2/5 maps one root onto the other
        CHECK(!minmod::relations_hold(m));
      }
    }
  }

  // ---- series recurrence against hand-computed heads ------------------
  SECTION("series heads");
  {
    const HypergeomParams p1 = minmod::params_for_k(Rational(-7, 10));
    const SeriesSolution s1 = minmod::f21_series(p1, 8);
    CHECK_EQ(s1.exponent_at_0, Rational(0));
    CHECK_EQ(s1.coefficients.size(), std::size_t{8});
    CHECK_EQ(s1.coefficients[0], Rational(1));
    CHECK_EQ(s1.coefficients[1], Rational(-1, 20));       // A B / C
    CHECK_EQ(s1.coefficients[2], Rational(-117, 6400));
    CHECK_EQ(s1.coefficients[3], Rational(-1311, 128000));

    const HypergeomParams p2 = minmod::params_for_k(Rational(-11, 10));
    const SeriesSolution s2 = minmod::f21_series(p2, 8);
    CHECK_EQ(s2.coefficients[0], Rational(1));
    CHECK_EQ(s2.coefficients[1], Rational(11, 20));
    CHECK_EQ(s2.coefficients[2], Rational(1309, 3200));

    // Second Frobenius solutions: exponents 1 - C and shifted heads.
    const SeriesSolution t1 = minmod::second_solution(p1, 8);
    CHECK_EQ(t1.exponent_at_0, Rational(2, 5));
    CHECK_EQ(t1.coefficients[0], Rational(1));
    CHECK_EQ(t1.coefficients[1], Rational(3, 20));
    CHECK_EQ(t1.coefficients[2], Rational(221, 3200));

    const SeriesSolution t2 = minmod::second_solution(p2, 8);
    CHECK_EQ(t2.exponent_at_0, Rational(-2, 5));
    CHECK_EQ(t2.coefficients[1], Rational(7, 20));

    CHECK_THROWS(minmod::f21_series(p1, 0), std::invalid_argument);
    CHECK_THROWS(minmod::f21_series(p1, -3), std::invalid_argument);
  }

  // ---- exact substitution into the equation ---------------------------
  SECTION("series solve the equation through truncation");
  {
    for (const Rational& k : {Rational(-7, 10), Rational(-11, 10)}) {
      const HypergeomParams p = minmod::params_for_k(k);
      const SeriesSolution s = minmod::f21_series(p, 40);
      CHECK(minmod::solution_satisfies_ode(p, s));

      const Polynomial r = minmod::substitution_residual(p, s);
      bool low_zero = true;
      for (long long i = 0; i < 40; ++i) low_zero = low_zero && r.coeff(i) == 0;
      CHECK(low_zero);
      CHECK(!r.is_zero());  // the truncation tail survives at z^40

      const SeriesSolution t = minmod::second_solution(p, 40);
      CHECK(minmod::solution_satisfies_ode(p, t));

      // A shorter prefix is still an exact truncated solution.
      SeriesSolution prefix{s.exponent_at_0,
                            {s.coefficients.begin(),
                             s.coefficients.begin() + 10}};
      CHECK(minmod::solution_satisfies_ode(p, prefix));

      // Tampering with one coefficient or the exponent is detected.
      SeriesSolution bad = s;
      bad.coefficients[7] = Rational(bad.coefficients[7] + Rational(1, 1000));
      CHECK(!minmod::solution_satisfies_ode(p, bad));
      bad = s;
      bad.exponent_at_0 = Rational(1, 2);
      CHECK(!minmod::solution_satisfies_ode(p, bad));
    }
  }

  // ---- local exponents -------------------------------------------------
  SECTION("indicial data at z = 0");
  {
    const HypergeomParams p1 = minmod::params_for_k(Rational(-7, 10));
    const HypergeomParams p2 = minmod::params_for_k(Rational(-11, 10));

    const auto [e10, e11] = minmod::local_exponents_at_0(p1);
    CHECK_EQ(e10, Rational(0));
    CHECK_EQ(e11, Rational(2, 5));
    const auto [e20, e21] = minmod::local_exponents_at_0(p2);
    CHECK_EQ(e20, Rational(0));
    CHECK_EQ(e21, Rational(-2, 5));

    const Polynomial phi1 = minmod::indicial_at_0(p1);
    CHECK_EQ(phi1.degree(), 2LL);
    CHECK_EQ(phi1(Rational(0)), Rational(0));
    CHECK_EQ(phi1(Rational(2, 5)), Rational(0));
    CHECK(phi1(Rational(1, 7)) != 0);
    // rho (rho - 1 + C) written out.
    CHECK_EQ(phi1,
             Polynomial({Rational(0), Rational(-2, 5), Rational(1)}));

    // The second solution's exponent is the nonzero indicial root.
    CHECK_EQ(minmod::second_solution(p1, 2).exponent_at_0, e11);
    CHECK_EQ(minmod::second_solution(p2, 2).exponent_at_0, e21);
  }

  // ---- terminating and degenerate parameters --------------------------
  SECTION("terminating series and degenerate parameters");
  {
    // A = 0: the constant solution 1.
    const HypergeomParams zp{Rational(0), Rational(5, 7), Rational(9, 4),
                             Rational(0)};
    const SeriesSolution zser = minmod::f21_series(zp, 12);
    bool constant_one = zser.coefficients[0] == 1;
    for (std::size_t i = 1; i < zser.coefficients.size(); ++i) {
      constant_one = constant_one && zser.coefficients[i] == 0;
    }
    CHECK(constant_one);
    CHECK(minmod::solution_satisfies_ode(zp, zser));
    CHECK(minmod::substitution_residual(zp, zser).is_zero());

    // A = -2: a degree-2 polynomial solution, residual identically zero.
    const HypergeomParams tp{Rational(-2), Rational(5, 3), Rational(1, 2),
                             Rational(0)};
    const SeriesSolution tser = minmod::f21_series(tp, 9);
    CHECK_EQ(tser.coefficients[1], Rational(-20, 3));
    CHECK_EQ(tser.coefficients[2], Rational(160, 27));
    CHECK_EQ(tser.coefficients[3], Rational(0));
    CHECK_EQ(tser.coefficients[8], Rational(0));
    CHECK(minmod::solution_satisfies_ode(tp, tser));
    CHECK(minmod::substitution_residual(tp, tser).is_zero());

    // Nonpositive integer C reached by the recurrence.
    const HypergeomParams d0{Rational(1, 2), Rational(1, 3), Rational(0),
                             Rational(0)};
    CHECK_THROWS(minmod::f21_series(d0, 4), DegenerateParameters);
    const HypergeomParams d2{Rational(1, 2), Rational(1, 3), Rational(-2),
                             Rational(0)};
    CHECK_THROWS(minmod::f21_series(d2, 10), DegenerateParameters);
    // ... but not if the truncation stops before the zero factor.
    const SeriesSolution short_ok = minmod::f21_series(d2, 3);
    CHECK_EQ(short_ok.coefficients.size(), std::size_t{3});

    // Second solution degenerates when 2 - C is a nonpositive integer.
    const HypergeomParams s2{Rational(1, 2), Rational(1, 3), Rational(2),
                             Rational(0)};
    CHECK_THROWS(minmod::second_solution(s2, 5), DegenerateParameters);
    const HypergeomParams s3{Rational(1, 2), Rational(1, 3), Rational(3),
                             Rational(0)};
    CHECK_THROWS(minmod::second_solution(s3, 5), DegenerateParameters);
    const SeriesSolution s3_short = minmod::second_solution(s3, 2);
    CHECK_EQ(s3_short.coefficients.size(), std::size_t{2});
  }

  // ---- reflection z -> 1 - z ------------------------------------------
  SECTION("reflection symmetry");
  {
    // Generic triple: the reflected parameters solve the reflected
    // equation, and the operators intertwine exactly on monomials.
    const HypergeomParams g{Rational(1, 2), Rational(1, 3), Rational(5, 4),
                            Rational(0)};
    const HypergeomParams gr = minmod::reflect_params(g);
    CHECK_EQ(gr.A, Rational(1, 2));
    CHECK_EQ(gr.B, Rational(1, 3));
    CHECK_EQ(gr.C, Rational(7, 12));
    CHECK(minmod::reflection_intertwines(g, 25));
    CHECK(minmod::reflect_params(gr) == g);  // involution
    CHECK(minmod::solution_satisfies_ode(
        gr, minmod::f21_series(gr, 25)));

    // The derived triples satisfy A + B + 1 - C = C: the equation is
    // invariant under z -> 1 - z, so solutions about z = 1 carry the same
    // parameters.
    for (const Rational& k : {Rational(-7, 10), Rational(-11, 10)}) {
      const HypergeomParams p = minmod::params_for_k(k);
      CHECK(minmod::reflect_params(p) == p);
      CHECK(minmod::reflection_intertwines(p, 40));
    }
  }

  // ---- independent cross-checks through the q-series engine -----------
  SECTION("Euler transformation and binomial cross-checks");
  {
    // F(A,B;B;z) = (1-z)^(-A): recurrence vs fractional power.
    {
      const HypergeomParams p{Rational(1, 2), Rational(3, 4),
                              Rational(3, 4), Rational(0)};
      const QSeries lhs = series_to_qs(minmod::f21_series(p, 24));
      const QSeries one_minus_z = zs({Rational(1), Rational(-1)}, 24);
      const QSeries rhs =
          minmod::pow_rational(one_minus_z, Rational(-1, 2));
      CHECK_EQ(lhs, rhs);
    }
    // Euler: F(A,B;C) = (1-z)^(C-A-B) F(C-A, C-B; C), exercised on both
    // derived triples where C - A - B = 1 - C = +-2/5.
    for (const Rational& k : {Rational(-7, 10), Rational(-11, 10)}) {
      const HypergeomParams p = minmod::params_for_k(k);
      const HypergeomParams q{Rational(p.C - p.A), Rational(p.C - p.B),
                              p.C, p.k};
      const QSeries lhs = series_to_qs(minmod::f21_series(p, 32));
      const QSeries one_minus_z = zs({Rational(1), Rational(-1)}, 32);
      const QSeries rhs = minmod::mul(
          minmod::pow_rational(one_minus_z,
                               Rational(p.C - p.A - p.B)),
          series_to_qs(minmod::f21_series(q, 32)));
      CHECK_EQ(lhs, rhs);
    }
  }

  // ---- symbolic gauge reduction ---------------------------------------
  SECTION("symbolic conjugation proof over Q[z, k, c]");
  {
    CHECK(minmod::gauge_ode_check());
  }

  return testkit::summary("hypergeom");
}
