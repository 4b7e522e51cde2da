/// @file modforms.hpp
/// @brief Catalog of the named modular objects used throughout the project,
///        all as exact QSeries, plus the Serre-derivative tower.
///
/// Conventions:
///   * Eisenstein series are normalized to constant term 1:
///     E_k = 1 - (2k/B_k) sum_{n>=1} sigma_{k-1}(n) q^n, so
///     E2 = 1 - 24q - ..., E4 = 1 + 240q + ..., E6 = 1 - 504q - ...
///   * eta = q^(1/24) prod_{n>=1} (1 - q^n); Delta = eta^24.
///   * j = 1728 E4^3 / (E4^3 - E6^2), leading term q^(-1).
///   * theta5(k), k in {1,2}, is the signed pentagonal-type theta
///       sum_{j in Z} (-1)^j q^((10j + 2k-1)^2 / 40),
///     i.e. a signed sum over the residue classes +-(2k-1) mod 10 with
///     leading exponent (2k-1)^2/40.  This convention is validated by the
///     eta * character = theta identities exercised in the test suite.
///   * rcf = q^(1/5) prod_{n>=1} (1-q^n)^{chi(n)} with chi the quadratic
///     character mod 5 (+1 for n = +-1, -1 for n = +-2 mod 5).
///
/// Every constructor takes `terms`: the number of integer q-steps beyond the
/// leading exponent for which the result is trusted (its trusted bound is
/// exactly leading_exponent + terms).

#pragma once

#include "minmod/qseries.hpp"

namespace minmod {

/// Eisenstein construction with an odd or non-positive weight.
struct InvalidWeight : std::domain_error {
  using std::domain_error::domain_error;
};

enum class FormName { E2, E4, E6, E12, Delta, Eta, Theta51, Theta52, J, RCF };

struct FormCatalogEntry {
  FormName name;
  Rational weight;  // eta/theta carry 1/2; j and rcf are weight 0
  QSeries series;
};

// ---- catalog constructors ---------------------------------------------

/// B_n (exact, via the defining recurrence); B_1 = -1/2.
Rational bernoulli(int n);

/// E_k for even k >= 2; InvalidWeight otherwise.
QSeries eisenstein(int k, long long terms);

QSeries eta(long long terms);
QSeries delta(long long terms);
QSeries jfunction(long long terms);

/// theta5(k) for k in {1,2}; throws InvalidWeight for other k.
QSeries theta5(int k, long long terms);

QSeries rcf(long long terms);

/// Dispatch by name; weight metadata attached.
FormCatalogEntry catalog_entry(FormName name, long long terms);
QSeries form(FormName name, long long terms);
Rational weight_of(FormName name);

const char* form_name_string(FormName name);
/// Parse "E4", "Delta", "Theta51", ... ; throws std::invalid_argument.
FormName parse_form_name(const std::string& text);

// ---- Serre derivative --------------------------------------------------

/// serre(f, w) = derive_q(f) - (w/12) E2 f, the weight-w covariant
/// derivative (weight may be rational, e.g. 1/2 for eta).  E2 is generated
/// internally with enough terms that the trusted window of f is preserved.
QSeries serre(const QSeries& f, const Rational& weight);

/// Iterated Serre derivative with weights 0, 2, ..., 2(m-1); m = 0 is the
/// identity.  Applied to a weight-0 object this is the natural order-m
/// covariant operator.
QSeries serre_tower(const QSeries& f, int m);

}  // namespace minmod
