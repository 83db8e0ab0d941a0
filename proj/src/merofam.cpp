#include "hinges/merofam.hpp"

#include <algorithm>
#include <numeric>

namespace hinges {

long pole_order(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("pole order of the zero polynomial");
  return -p.ord();
}

long pole_order(const LaurentMatrix& g) {
  bool seen = false;
  long worst = 0;
  for (const auto& e : g.entries) {
    if (e.is_zero()) continue;
    long o = -e.ord();
    worst = seen ? std::max(worst, o) : o;
    seen = true;
  }
  if (!seen) throw std::domain_error("pole order of the zero matrix");
  return worst;
}

namespace {

std::vector<std::vector<std::vector<LaurentPoly>>> minor_levels(const LaurentMatrix& g) {
  std::vector<std::vector<std::vector<LaurentPoly>>> levels;
  for (std::size_t j = 0; j <= g.n; ++j) levels.push_back(laurent_minors(g, j));
  return levels;
}

ExponentData exponents_from_orders(const std::vector<long>& cumulative) {
  ExponentData e;
  long prev = 0;
  for (long c : cumulative) {
    e.m.push_back(c - prev);
    prev = c;
  }
  for (std::size_t i = 0; i + 1 < e.m.size(); ++i)
    if (e.m[i] < e.m[i + 1]) throw std::logic_error("exponents are not sorted");
  for (long v : e.m) {
    if (e.k.empty() || e.k.back() != v) {
      e.k.push_back(v);
      e.alpha.push_back(1);
    } else {
      ++e.alpha.back();
    }
  }
  return e;
}

}  // namespace

ExponentData exponents(const LaurentMatrix& g) {
  if (g.n == 0) throw std::invalid_argument("empty family");
  auto levels = minor_levels(g);
  if (levels[g.n][0][0].is_zero())
    throw std::domain_error("family has identically singular determinant");
  std::vector<long> cumulative;
  for (std::size_t j = 1; j <= g.n; ++j) {
    bool seen = false;
    long worst = 0;
    for (const auto& row : levels[j])
      for (const auto& p : row) {
        if (p.is_zero()) continue;
        long o = -p.ord();
        worst = seen ? std::max(worst, o) : o;
        seen = true;
      }
    if (!seen) throw std::domain_error("family has identically singular determinant");
    cumulative.push_back(worst);
  }
  return exponents_from_orders(cumulative);
}

long default_precision(const LaurentMatrix& g) {
  ExponentData e = exponents(g);
  long span_lo = 0, span_hi = 0;
  bool seen = false;
  for (const auto& p : g.entries) {
    if (p.is_zero()) continue;
    span_lo = seen ? std::min(span_lo, p.ord()) : p.ord();
    span_hi = seen ? std::max(span_hi, p.max_exp()) : p.max_exp();
    seen = true;
  }
  return (e.m.front() - e.m.back()) + 1 + (span_hi - span_lo);
}

Factorization factorize(const LaurentMatrix& g, long precision) {
  ExponentData expected = exponents(g);  // exact reference path
  if (precision <= 0) precision = default_precision(g);
  long hi = 0;
  for (const auto& p : g.entries)
    if (!p.is_zero()) hi = std::max(hi, p.max_exp());
  const long cut = hi + precision;  // keep exponents strictly below this

  std::size_t n = g.n;
  LaurentMatrix work = g;
  LaurentMatrix a = LaurentMatrix::identity(n);
  LaurentMatrix b = LaurentMatrix::identity(n);

  auto trunc_all = [&](LaurentMatrix& m) {
    for (auto& p : m.entries) p = p.truncated(cut);
  };

  for (std::size_t t = 0; t < n; ++t) {
    // Pivot: the entry of minimal ord in the trailing block, row-major ties.
    std::size_t pi = t, pj = t;
    long best = LaurentPoly::kOrdInfinity;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (!work(i, j).is_zero() && work(i, j).ord() < best) {
          best = work(i, j).ord();
          pi = i;
          pj = j;
        }
    if (best == LaurentPoly::kOrdInfinity)
      throw PrecisionError("elimination ran out of nonzero entries", precision + 5);
    if (pi != t) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(t, j), work(pi, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, t), a(i, pi));
    }
    if (pj != t) {
      for (std::size_t i = 0; i < n; ++i) std::swap(work(i, t), work(i, pj));
      for (std::size_t j = 0; j < n; ++j) std::swap(b(t, j), b(pj, j));
    }
    LaurentPoly pivot_inv = work(t, t).inverse_truncated(cut - work(t, t).ord());
    for (std::size_t i = t + 1; i < n; ++i) {
      if (work(i, t).is_zero()) continue;
      LaurentPoly f = (work(i, t) * pivot_inv).truncated(cut);
      for (std::size_t j = t; j < n; ++j)
        work(i, j) = (work(i, j) - f * work(t, j)).truncated(cut);
      for (std::size_t r = 0; r < n; ++r)
        a(r, t) = (a(r, t) + f * a(r, i)).truncated(cut);
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (work(t, j).is_zero()) continue;
      LaurentPoly f = (work(t, j) * pivot_inv).truncated(cut);
      for (std::size_t i = t; i < n; ++i)
        work(i, j) = (work(i, j) - f * work(i, t)).truncated(cut);
      for (std::size_t c = 0; c < n; ++c)
        b(t, c) = (b(t, c) + f * b(j, c)).truncated(cut);
    }
  }

  Factorization f;
  f.precision = precision;
  f.exact_below = hi + 1;
  f.m.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    f.m[t] = -work(t, t).ord();
    // Fold the unit part of the pivot into a.
    LaurentPoly unit = work(t, t).shifted(f.m[t]);
    for (std::size_t r = 0; r < n; ++r)
      a(r, t) = (a(r, t) * unit).truncated(cut);
  }
  trunc_all(a);
  trunc_all(b);
  f.a = std::move(a);
  f.b = std::move(b);
  if (f.m != expected.m)
    throw PrecisionError("factorization exponents disagree with the minor orders",
                         precision + 5);
  if (f.a.coeff_matrix(0).det() == 0 || f.b.coeff_matrix(0).det() == 0)
    throw PrecisionError("jet lost invertibility at 0", precision + 5);
  // Reassembly must reproduce every stored coefficient of the input.
  LaurentMatrix d(n);
  for (std::size_t t = 0; t < n; ++t)
    d(t, t) = LaurentPoly::monomial(-f.m[t], Rational(1));
  LaurentMatrix re = f.a * d * f.b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (re(i, j).truncated(f.exact_below) != g(i, j).truncated(f.exact_below))
        throw PrecisionError("reassembly mismatch, raise the working precision",
                             precision + 5);
  return f;
}

std::vector<LaurentPoly> graph_pluecker(const LaurentMatrix& g, long k) {
  std::size_t n = g.n;
  // Columns of [I ; z^k g].
  std::vector<std::vector<LaurentPoly>> cols(n, std::vector<LaurentPoly>(2 * n));
  for (std::size_t c = 0; c < n; ++c) {
    cols[c][c] = LaurentPoly(Rational(1));
    for (std::size_t r = 0; r < n; ++r) cols[c][n + r] = g(r, c).shifted(k);
  }
  auto row_sets = combinations(2 * n, n);
  std::vector<LaurentPoly> out;
  out.reserve(row_sets.size());
  for (const auto& rows : row_sets) {
    // det of the n x n submatrix by Laplace expansion along columns.
    LaurentMatrix sub(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < n; ++c) sub(i, c) = cols[c][rows[i]];
    out.push_back(sub.det());
  }
  return out;
}

LinearRelation limit_relation(const LaurentMatrix& g, long k) {
  std::size_t n = g.n;
  std::vector<std::vector<LaurentPoly>> cols(n, std::vector<LaurentPoly>(2 * n));
  for (std::size_t c = 0; c < n; ++c) {
    cols[c][c] = LaurentPoly(Rational(1));
    for (std::size_t r = 0; r < n; ++r) cols[c][n + r] = g(r, c).shifted(k);
  }
  auto normalize = [&](std::size_t c) {
    long d = LaurentPoly::kOrdInfinity;
    for (const auto& p : cols[c])
      if (!p.is_zero()) d = std::min(d, p.ord());
    if (d == LaurentPoly::kOrdInfinity) throw std::logic_error("zero column in limit");
    if (d != 0)
      for (auto& p : cols[c]) p = p.shifted(-d);
  };
  for (std::size_t c = 0; c < n; ++c) normalize(c);

  // Strictly decreasing measure: the minimal Plucker-minor order.
  long guard = 0;
  {
    std::vector<std::vector<std::size_t>> row_sets = combinations(2 * n, n);
    long mu = LaurentPoly::kOrdInfinity;
    for (const auto& rows : row_sets) {
      LaurentMatrix sub(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c) sub(i, c) = cols[c][rows[i]];
      LaurentPoly dd = sub.det();
      if (!dd.is_zero()) mu = std::min(mu, dd.ord());
    }
    if (mu == LaurentPoly::kOrdInfinity)
      throw std::domain_error("family has identically singular determinant");
    guard = mu;
  }

  for (long step = 0; step <= guard; ++step) {
    RationalMatrix e(2 * n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < 2 * n; ++r) e(r, c) = cols[c][r].coeff(0);
    RationalMatrix ker = e.kernel_basis();
    if (ker.rows() == 0)
      return LinearRelation(n, n, Subspace(2 * n, e.transpose()));
    // Fold the kernel combination into its highest participating column.
    std::vector<Rational> x = ker.row(0);
    std::size_t tmax = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (x[c] != 0) tmax = c;
    std::vector<LaurentPoly> combo(2 * n);
    for (std::size_t c = 0; c < n; ++c) {
      if (x[c] == 0) continue;
      for (std::size_t r = 0; r < 2 * n; ++r)
        combo[r] = combo[r] + cols[c][r] * x[c];
    }
    cols[tmax] = std::move(combo);
    normalize(tmax);
  }
  throw std::logic_error("limit reduction exceeded its termination bound");
}

LimitHinge limit_hinge(const LaurentMatrix& g) {
  ExponentData e = exponents(g);
  std::vector<LinearRelation> terms;
  for (std::size_t j = 0; j < e.k.size(); ++j) {
    LinearRelation p = limit_relation(g, e.k[j]);
    if (p.rk() != e.alpha[j])
      throw std::logic_error("limit relation rank differs from the multiplicity");
    terms.push_back(std::move(p));
  }
  LimitHinge lh{std::move(e), validate_hinge(terms)};
  return lh;
}

GluedFamily limit_glued(const LaurentMatrix& g) {
  ExponentData e = exponents(g);
  std::size_t n = g.n;
  std::vector<RationalMatrix> blocks(n + 1);
  blocks[0] = RationalMatrix(1, 1);
  blocks[0](0, 0) = 1;
  long partial = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    partial += e.m[j - 1];
    auto minors = laurent_minors(g, j);
    RationalMatrix blk(minors.size(), minors.size());
    bool nonzero = false;
    for (std::size_t r = 0; r < minors.size(); ++r)
      for (std::size_t c = 0; c < minors.size(); ++c) {
        if (!minors[r][c].is_zero() && minors[r][c].ord() < -partial)
          throw std::logic_error("minor order exceeds the exponent sum");
        blk(r, c) = minors[r][c].coeff(-partial);
        if (blk(r, c) != 0) nonzero = true;
      }
    if (!nonzero) throw std::logic_error("degree limit vanished");
    blocks[j] = std::move(blk);
  }
  return GluedFamily{n, std::move(blocks), completed(limit_hinge(g).hinge)};
}

namespace {

LaurentPoly substitute(const LaurentPoly& p, const std::vector<Rational>& higher,
                       long cut) {
  // phi = z * w, w = 1 + higher[0] z + ...; powers of w are truncated series.
  LaurentPoly w(Rational(1));
  for (std::size_t i = 0; i < higher.size(); ++i)
    w.set_coeff(static_cast<long>(i) + 1, higher[i]);
  LaurentPoly w_inv = w.inverse_truncated(cut - std::min(p.ord(), 0L));
  LaurentPoly out;
  for (const auto& [e, c] : p.coeffs()) {
    LaurentPoly we(Rational(1));
    const LaurentPoly& base = e >= 0 ? w : w_inv;
    for (long t = 0; t < std::abs(e); ++t) we = (we * base).truncated(cut - e);
    out = out + we.shifted(e) * c;
  }
  return out.truncated(cut);
}

}  // namespace

LaurentMatrix reparametrize(const LaurentMatrix& g, const Reparam& r) {
  LaurentMatrix out(g.n);
  if (std::holds_alternative<PowerReparam>(r)) {
    long p = std::get<PowerReparam>(r).p;
    if (p < 1) throw std::invalid_argument("power substitution needs p >= 1");
    for (std::size_t i = 0; i < g.entries.size(); ++i)
      for (const auto& [e, c] : g.entries[i].coeffs())
        out.entries[i].set_coeff(e * p, c);
    return out;
  }
  if (std::holds_alternative<ScalarReparam>(r)) {
    const Rational& c = std::get<ScalarReparam>(r).c;
    if (c == 0) throw std::invalid_argument("scalar substitution needs c != 0");
    for (std::size_t i = 0; i < g.entries.size(); ++i)
      for (const auto& [e, x] : g.entries[i].coeffs())
        out.entries[i].set_coeff(e, x * rat_pow(c, e));
    return out;
  }
  const auto& f = std::get<FormalReparam>(r);
  long precision = f.precision > 0 ? f.precision : default_precision(g);
  long hi = 0;
  for (const auto& p : g.entries)
    if (!p.is_zero()) hi = std::max(hi, p.max_exp());
  long cut = hi + precision;
  for (std::size_t i = 0; i < g.entries.size(); ++i)
    out.entries[i] = substitute(g.entries[i], f.higher, cut);
  return out;
}

}  // namespace hinges
