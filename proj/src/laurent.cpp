#include "hinges/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "hinges/subspace.hpp"

namespace hinges {

LaurentPoly LaurentPoly::monomial(long exp, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.c_[exp] = c;
  return p;
}

Rational LaurentPoly::coeff(long exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(long exp, const Rational& c) {
  if (c == 0)
    c_.erase(exp);
  else
    c_[exp] = c;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.c_) {
    auto it = r.c_.find(e);
    if (it == r.c_.end()) {
      r.c_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.c_.erase(it);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + o * Rational(-1);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) {
      auto it = r.c_.find(e1 + e2);
      if (it == r.c_.end()) {
        Rational p = c1 * c2;
        if (p != 0) r.c_[e1 + e2] = p;
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.c_.erase(it);
      }
    }
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, x] : c_) r.c_[e] = x * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, x] : c_) r.c_[e + k] = x;
  return r;
}

LaurentPoly LaurentPoly::truncated(long below) const {
  LaurentPoly r;
  for (const auto& [e, x] : c_) {
    if (e >= below) break;
    r.c_[e] = x;
  }
  return r;
}

LaurentPoly LaurentPoly::inverse_truncated(long below) const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  long d = ord();
  // p = z^d * (c0 + c1 z + ...) with c0 != 0; invert the unit part by the
  // standard recursion, then shift by -d.
  Rational c0 = coeff(d);
  long len = below + d;  // exponents of the result run from -d up to below-1
  LaurentPoly inv;
  if (len <= 0) return inv;  // nothing requested
  std::size_t terms = static_cast<std::size_t>(len);
  std::vector<Rational> u(terms, Rational(0));  // unit-part inverse coefficients
  Rational inv_c0 = Rational(1) / c0;
  u[0] = inv_c0;
  for (std::size_t k = 1; k < terms; ++k) {
    Rational s(0);
    for (std::size_t i = 1; i <= k; ++i) {
      Rational a = coeff(d + static_cast<long>(i));
      if (a != 0) s += a * u[k - i];
    }
    u[k] = -s * inv_c0;
  }
  for (std::size_t k = 0; k < terms; ++k)
    if (u[k] != 0) inv.c_[static_cast<long>(k) - d] = u[k];
  return inv;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << rational_str(a);
    } else {
      if (a != 1) os << rational_str(a) << "*";
      os << "z";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(Rational(1));
  return m;
}

LaurentMatrix LaurentMatrix::from_constant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("square matrix expected");
  LaurentMatrix m(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = LaurentPoly(a(i, j));
  return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  if (n != o.n) throw std::invalid_argument("shape mismatch");
  LaurentMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        r(i, j) = r(i, j) + (*this)(i, k) * o(k, j);
    }
  return r;
}

LaurentPoly LaurentMatrix::det() const {
  auto minors = laurent_minors(*this, n);
  return minors[0][0];
}

RationalMatrix LaurentMatrix::coeff_matrix(long exp) const {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (*this)(i, j).coeff(exp);
  return m;
}

std::vector<std::vector<LaurentPoly>> laurent_minors(const LaurentMatrix& m,
                                                     std::size_t k) {
  std::size_t n = m.n;
  if (k > n) throw std::invalid_argument("minor size exceeds matrix size");
  // Level t holds all t x t minors; expand along the last row of the row set.
  std::vector<std::vector<LaurentPoly>> prev(
      1, std::vector<LaurentPoly>(1, LaurentPoly(Rational(1))));
  std::vector<std::vector<std::size_t>> prev_rows = combinations(n, 0);
  std::vector<std::vector<std::size_t>> prev_cols = prev_rows;
  for (std::size_t t = 1; t <= k; ++t) {
    auto rows_t = combinations(n, t);
    auto cols_t = rows_t;
    std::vector<std::vector<LaurentPoly>> cur(
        rows_t.size(), std::vector<LaurentPoly>(cols_t.size()));
    for (std::size_t r = 0; r < rows_t.size(); ++r) {
      std::vector<std::size_t> j_rest(rows_t[r].begin(), rows_t[r].end() - 1);
      std::size_t last_row = rows_t[r].back();
      std::size_t jr = comb_rank(n, j_rest);
      for (std::size_t c = 0; c < cols_t.size(); ++c) {
        LaurentPoly acc;
        const auto& I = cols_t[c];
        for (std::size_t p = 0; p < t; ++p) {
          const LaurentPoly& a = m(last_row, I[p]);
          if (a.is_zero()) continue;
          std::vector<std::size_t> i_rest;
          i_rest.reserve(t - 1);
          for (std::size_t q = 0; q < t; ++q)
            if (q != p) i_rest.push_back(I[q]);
          LaurentPoly term = a * prev[jr][comb_rank(n, i_rest)];
          acc = ((t - 1 - p) % 2 == 0) ? acc + term : acc - term;
        }
        cur[r][c] = std::move(acc);
      }
    }
    prev = std::move(cur);
  }
  return prev;
}

}  // namespace hinges
