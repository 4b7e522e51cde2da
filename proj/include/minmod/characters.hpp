/// @file characters.hpp
/// @brief The M = (nu-1)/2 characters of the (2, nu) family as exact
///        q-series, generated independently by a fermionic nested sum and
///        by an infinite-product formula.
///
/// Both routes produce  q^kappa_s * (1 + ...)  with
///   kappa_s = (nu - 2s)^2/(8 nu) - 1/24,  s = 1..M,
/// so s = 1 is the vacuum label and carries the LARGEST exponent; the
/// exponents decrease as s grows.  Every tabular consumer of these series
/// states that ordering explicitly.
///
/// The nested sum is  q^kappa_s sum_{n in N0^r} q^(n^T A n + B^(s).n) / (q)_n
/// with A the inverse of the tadpole Cartan matrix (A_r Cartan with the
/// last diagonal entry folded to 1) and B^(s)_j = max(0, j - s + 1).
/// The product is  q^kappa_s prod_{n not== 0, +-s (mod nu)} (1-q^n)^(-1).

#pragma once

#include "minmod/qseries.hpp"

#include <vector>

namespace minmod {

/// Character index s outside 1..M.
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct ModelSpec {
  int nu = 5;

  /// Validates nu odd and >= 3.
  static ModelSpec make(int nu);

  int M() const { return (nu - 1) / 2; }
  int r() const { return (nu - 3) / 2; }

  /// 1 - 3 (nu-2)^2 / nu  (for nu = 5: -22/5).
  Rational central_charge() const;

  /// kappa_s = (nu-2s)^2/(8 nu) - 1/24; throws IndexOutOfRange off 1..M.
  Rational kappa(int s) const;

  /// kappa_1 .. kappa_M (strictly decreasing).
  std::vector<Rational> kappas() const;
};

/// The folded Cartan data driving the quadratic form of the nested sum.
struct TadpoleForm {
  int size = 0;                                   // r
  std::vector<std::vector<Rational>> cartan;      // r x r, integer entries
  std::vector<std::vector<Rational>> inverse;     // cartan^-1, exact

  /// Builds the matrix and inverts it by Gauss-Jordan over the rationals.
  static TadpoleForm make(int r);

  /// Linear term of character s: B^(s)_j = max(0, j - s + 1), j = 1..r.
  std::vector<Rational> b_vector(int s) const;
};

/// Fermionic-sum route; trusted below kappa_s + terms.
QSeries character_sum(const ModelSpec& spec, int s, long long terms);

/// Product route; trusted below kappa_s + terms.
QSeries character_product(const ModelSpec& spec, int s, long long terms);

/// Coefficients of q^(-kappa_1) * vacuum character at q^0..q^hmax -- the
/// number of independent holomorphic states at each level.  Only defined
/// for nu = 5 (throws std::invalid_argument otherwise).
std::vector<long long> vacuum_dimension_table(const ModelSpec& spec, int hmax);

}  // namespace minmod
