#include "minmod/ode.hpp"

#include <string>

namespace minmod {

// ---- indicial algebra --------------------------------------------------

Polynomial indicial_polynomial(const ModelSpec& spec) {
  return Polynomial::from_roots(spec.kappas());
}

Polynomial tower_indicial(int m) {
  if (m < 0) throw std::domain_error("tower_indicial order must be >= 0");
  std::vector<Rational> roots;
  roots.reserve(static_cast<std::size_t>(m));
  for (int l = 0; l < m; ++l) roots.push_back(rat(l, 6));
  return Polynomial::from_roots(roots);
}

// ---- operator derivation ----------------------------------------------

OdeOperator derive_alphas(const std::vector<Rational>& kappas) {
  const int M = static_cast<int>(kappas.size());
  if (M < 1 || M > 6) {
    throw std::domain_error(
        "derive_alphas needs 1..6 exponents (coefficient basis stops at weight 12)");
  }
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    for (std::size_t j = i + 1; j < kappas.size(); ++j) {
      if (kappas[i] == kappas[j]) {
        throw SingularSystem("repeated exponent " + to_string(kappas[i]));
      }
    }
  }
  Polynomial residue = sub(Polynomial::from_roots(kappas), tower_indicial(M));
  if (residue.coeff(M - 1) != 0) {
    throw ConsistencyFailure(
        "kappa^(M-1) mismatch: exponent sum differs from M(M-1)/12 by " +
        to_string(residue.coeff(M - 1)));
  }
  OdeOperator op;
  op.M = M;
  for (int m = M - 2; m >= 0; --m) {
    const Rational a = residue.coeff(m);
    op.alphas[m] = a;
    residue = sub(residue, scale(a, tower_indicial(m)));
  }
  if (!residue.is_zero()) {
    throw std::logic_error("triangular elimination left a nonzero residue");
  }
  return op;
}

OdeOperator derive_alphas(const ModelSpec& spec) {
  if (spec.M() > 6) {
    throw std::domain_error(
        "operator derivation is implemented through order M = 6 (nu <= 13)");
  }
  OdeOperator op = derive_alphas(spec.kappas());
  if (op.M == 6) {
    // The Delta component of Omega_12 is invisible at leading q-order; it
    // is fixed by demanding that the image of the vacuum character also
    // vanish one q-step higher, where Delta * <1>_1 contributes exactly 1.
    const QSeries vacuum = character_product(spec, 1, op.M + 3);
    const QSeries image = apply(op, vacuum);
    op.alpha_cusp = Rational(-image.coeff(Rational(spec.kappa(1) + 1)));
  }
  return op;
}

// ---- application -------------------------------------------------------

QSeries omega_series(const OdeOperator& op, int m, long long terms) {
  if (terms < 1) throw std::domain_error("omega_series needs terms >= 1");
  QSeries out = QSeries::zero(Rational(terms));
  const auto it = op.alphas.find(m);
  if (it != op.alphas.end() && it->second != 0) {
    QSeries basis;
    switch (op.M - m) {
      case 2:
        basis = eisenstein(4, terms);
        break;
      case 3:
        basis = eisenstein(6, terms);
        break;
      case 4: {
        const QSeries e4 = eisenstein(4, terms);
        basis = mul(e4, e4);
        break;
      }
      case 5:
        basis = mul(eisenstein(4, terms), eisenstein(6, terms));
        break;
      case 6:
        basis = eisenstein(12, terms);
        break;
      default:
        throw std::domain_error("coefficient weight outside the handled basis");
    }
    out = scale(it->second, basis);
  }
  if (m == 0 && op.alpha_cusp && *op.alpha_cusp != 0) {
    out = add(out, scale(*op.alpha_cusp, delta(terms)));
  }
  return out;
}

QSeries apply(const OdeOperator& op, const QSeries& f) {
  if (op.M < 1) throw std::domain_error("apply: empty operator");
  if (f.is_zero()) return f;
  const Rational rel = Rational(f.trusted_below() - f.offset());
  if (rel < op.M + 1) {
    throw InsufficientTruncation("series window " + to_string(rel) +
                                 " is below order + 1 = " +
                                 std::to_string(op.M + 1));
  }
  const long long terms = to_long(ceil_int(rel)) + 1;
  QSeries acc = QSeries::zero(f.trusted_below());
  QSeries tower = f;  // Dtower^m f, advanced in place
  for (int m = 0; m <= op.M; ++m) {
    if (m == op.M) {
      acc = add(acc, tower);
    } else {
      const QSeries omega = omega_series(op, m, terms);
      if (!omega.is_zero()) acc = add(acc, mul(omega, tower));
    }
    if (m < op.M) tower = serre(tower, Rational(2 * m));
  }
  return acc;
}

// ---- cross-checks ------------------------------------------------------

bool second_order_check_25(long long trunc) {
  if (trunc < 16) {
    throw std::invalid_argument("second_order_check_25 needs trunc >= 16");
  }
  const ModelSpec spec = ModelSpec::make(5);
  const OdeOperator op = derive_alphas(spec);
  const QSeries e4 = eisenstein(4, trunc + 1);
  for (int s = 1; s <= 2; ++s) {
    const QSeries f = character_product(spec, s, trunc);
    const QSeries direct =
        sub(serre(serre(f, Rational(0)), Rational(2)),
            scale(rat(11, 3600), mul(e4, f)));
    if (!is_zero_below(direct, direct.trusted_below())) return false;
    if (!agree(direct, apply(op, f))) return false;
  }
  return true;
}

namespace {

// Cofactor-expansion determinant of a small matrix of series.
QSeries qdet(const std::vector<std::vector<QSeries>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  QSeries acc;
  bool first = true;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<QSeries>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<QSeries> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    QSeries term = mul(m[0][j], qdet(minor));
    if (j % 2 == 1) term = neg(term);
    acc = first ? term : add(acc, term);
    first = false;
  }
  return acc;
}

}  // namespace

std::vector<QSeries> wronskian_ode(const std::vector<QSeries>& solutions) {
  const int M = static_cast<int>(solutions.size());
  if (M < 1 || M > 6) {
    throw std::domain_error("wronskian_ode needs 1..6 solutions");
  }
  for (const QSeries& f : solutions) {
    const Rational rel = Rational(f.trusted_below() - f.low_bound());
    if (rel < M + 1) {
      throw InsufficientTruncation("solution window " + to_string(rel) +
                                   " is below order + 1 = " +
                                   std::to_string(M + 1));
    }
  }
  std::vector<std::vector<QSeries>> rows(
      static_cast<std::size_t>(M) + 1,
      std::vector<QSeries>(static_cast<std::size_t>(M)));
  for (int j = 0; j < M; ++j) {
    QSeries t = solutions[static_cast<std::size_t>(j)];
    for (int i = 0; i <= M; ++i) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t;
      if (i < M) t = serre(t, Rational(2 * i));
    }
  }
  std::vector<QSeries> w(static_cast<std::size_t>(M) + 1);
  for (int i = 0; i <= M; ++i) {
    std::vector<std::vector<QSeries>> minor;
    minor.reserve(static_cast<std::size_t>(M));
    for (int r = 0; r <= M; ++r) {
      if (r != i) minor.push_back(rows[static_cast<std::size_t>(r)]);
    }
    const QSeries d = qdet(minor);
    w[static_cast<std::size_t>(i)] = (i % 2 == 0) ? d : neg(d);
  }
  return w;
}

std::pair<Rational, Rational> boundary_exponents_25() {
  // alpha^2 - alpha/3 - 11/900 = 0.
  const Rational disc = Rational(rat(1, 9) + rat(44, 900));
  const Rational root = rational_sqrt(disc);
  return {Rational((rat(1, 3) - root) / 2), Rational((rat(1, 3) + root) / 2)};
}

}  // namespace minmod
