#include "minmod/characters.hpp"

#include <cmath>
#include <functional>

namespace minmod {

namespace {

// (1-q) (1-q^2) ... (1-q^m) as an exact dense polynomial below `bound`.
std::vector<Rational> pochhammer(long long m, long long bound) {
  std::vector<Rational> v(static_cast<std::size_t>(bound));
  v[0] = 1;
  for (long long n = 1; n <= m; ++n)
    for (long long i = bound - 1; i >= n; --i)
      v[static_cast<std::size_t>(i)] -= v[static_cast<std::size_t>(i - n)];
  return v;
}

}  // namespace

ModelSpec ModelSpec::make(int nu) {
  if (nu < 3 || nu % 2 == 0)
    throw std::invalid_argument("model parameter nu must be an odd integer >= 3, got " +
                                std::to_string(nu));
  return ModelSpec{nu};
}

Rational ModelSpec::central_charge() const {
  return Rational(1) - Rational(3 * (nu - 2) * (nu - 2), nu);
}

Rational ModelSpec::kappa(int s) const {
  if (s < 1 || s > M())
    throw IndexOutOfRange("character index " + std::to_string(s) +
                          " outside 1.." + std::to_string(M()));
  return Rational((nu - 2 * s) * (nu - 2 * s), 8 * nu) - rat(1, 24);
}

std::vector<Rational> ModelSpec::kappas() const {
  std::vector<Rational> ks;
  for (int s = 1; s <= M(); ++s) ks.push_back(kappa(s));
  return ks;
}

TadpoleForm TadpoleForm::make(int r) {
  if (r < 0) throw std::invalid_argument("tadpole rank must be >= 0");
  TadpoleForm t;
  t.size = r;
  t.cartan.assign(r, std::vector<Rational>(r, Rational(0)));
  for (int i = 0; i < r; ++i) {
    t.cartan[i][i] = (i == r - 1) ? 1 : 2;  // folded last node
    if (i + 1 < r) {
      t.cartan[i][i + 1] = -1;
      t.cartan[i + 1][i] = -1;
    }
  }
  // Gauss-Jordan inverse over the rationals.
  std::vector<std::vector<Rational>> a = t.cartan;
  std::vector<std::vector<Rational>> inv(r, std::vector<Rational>(r, Rational(0)));
  for (int i = 0; i < r; ++i) inv[i][i] = 1;
  for (int col = 0; col < r; ++col) {
    int pivot = -1;
    for (int row = col; row < r; ++row)
      if (a[row][col] != 0) { pivot = row; break; }
    if (pivot < 0) throw std::logic_error("tadpole matrix is singular");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Rational p = a[col][col];
    for (int j = 0; j < r; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int row = 0; row < r; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (int j = 0; j < r; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  t.inverse = std::move(inv);
  return t;
}

std::vector<Rational> TadpoleForm::b_vector(int s) const {
  std::vector<Rational> b(static_cast<std::size_t>(size));
  for (int j = 1; j <= size; ++j)
    b[static_cast<std::size_t>(j - 1)] = std::max(0, j - s + 1);
  return b;
}

QSeries character_sum(const ModelSpec& spec, int s, long long terms) {
  const Rational kappa = spec.kappa(s);  // validates s
  const int r = spec.r();
  const Rational bound(terms);
  if (r == 0)  // empty sum: the single term n = () contributes q^0
    return shift(QSeries::monomial(1, 0, bound), kappa);

  const TadpoleForm tad = TadpoleForm::make(r);
  const std::vector<Rational> b = tad.b_vector(s);

  // n_i^2 <= n^T A n <= terms because A_ii = min(i,i) >= 1, so each part
  // is bounded by sqrt(terms).
  const long long nmax =
      static_cast<long long>(std::sqrt(static_cast<double>(terms))) + 1;
  std::vector<QSeries> inv_poch(static_cast<std::size_t>(nmax + 1));
  for (long long m = 0; m <= nmax; ++m)
    inv_poch[static_cast<std::size_t>(m)] = invert(
        QSeries::from_coeffs(0, 1, pochhammer(m, terms + 1), Rational(terms + 1)));

  // Depth-first over (n_1 .. n_r), sharing the partial product of
  // 1/(q)_{n_i} along the prefix; the quadratic+linear exponent is monotone
  // in every coordinate, so a prefix whose exponent already exceeds the
  // window cannot contribute.
  QSeries total = QSeries::zero(bound);
  std::vector<long long> n(static_cast<std::size_t>(r), 0);
  std::function<void(int, const QSeries&)> descend = [&](int depth,
                                                         const QSeries& partial) {
    if (depth == r) {
      Rational expo(0);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j)
          expo += tad.inverse[i][j] * n[static_cast<std::size_t>(i)] *
                  n[static_cast<std::size_t>(j)];
        expo += b[static_cast<std::size_t>(i)] * n[static_cast<std::size_t>(i)];
      }
      if (expo >= bound) return;
      total = add(total, shift(truncate(partial, bound - expo), expo));
      return;
    }
    for (long long v = 0; v <= nmax; ++v) {
      n[static_cast<std::size_t>(depth)] = v;
      // Lower bound on the final exponent with the remaining parts zero.
      Rational lower(0);
      for (int i = 0; i <= depth; ++i) {
        for (int j = 0; j <= depth; ++j)
          lower += tad.inverse[i][j] * n[static_cast<std::size_t>(i)] *
                   n[static_cast<std::size_t>(j)];
        lower += b[static_cast<std::size_t>(i)] * n[static_cast<std::size_t>(i)];
      }
      if (lower >= bound) break;  // monotone in v: nothing further fits
      descend(depth + 1,
              v == 0 ? partial : mul(partial, inv_poch[static_cast<std::size_t>(v)]));
    }
    n[static_cast<std::size_t>(depth)] = 0;
  };
  descend(0, QSeries::monomial(1, 0, bound));
  return shift(truncate(total, bound), kappa);
}

QSeries character_product(const ModelSpec& spec, int s, long long terms) {
  const Rational kappa = spec.kappa(s);  // validates s
  std::vector<Rational> prod(static_cast<std::size_t>(terms));
  prod[0] = 1;
  for (long long n = 1; n < terms; ++n) {
    const int res = static_cast<int>(n % spec.nu);
    if (res == 0 || res == s || res == spec.nu - s) continue;
    for (long long i = terms - 1; i >= n; --i)
      prod[static_cast<std::size_t>(i)] -= prod[static_cast<std::size_t>(i - n)];
  }
  return shift(
      invert(QSeries::from_coeffs(0, 1, std::move(prod), Rational(terms))),
      kappa);
}

std::vector<long long> vacuum_dimension_table(const ModelSpec& spec, int hmax) {
  if (spec.nu != 5)
    throw std::invalid_argument("vacuum dimension table is defined for nu = 5");
  const QSeries vac = character_product(spec, 1, hmax + 1);
  const Rational kappa = spec.kappa(1);
  std::vector<long long> dims;
  for (int h = 0; h <= hmax; ++h)
    dims.push_back(to_long(numerator(vac.coeff(kappa + h))));
  return dims;
}

}  // namespace minmod
