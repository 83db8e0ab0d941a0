#include "hinges/subspace.hpp"

#include <stdexcept>

namespace hinges {

Subspace::Subspace(std::size_t ambient_dim, const RationalMatrix& span_rows)
    : ambient_(ambient_dim) {
  if (span_rows.rows() > 0 && span_rows.cols() != ambient_dim)
    throw std::invalid_argument("span width != ambient dimension");
  basis_ = span_rows.rref().first.drop_zero_rows();
  if (basis_.rows() == 0) basis_ = RationalMatrix(0, ambient_dim);
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return Subspace(ambient_dim, RationalMatrix::identity(ambient_dim));
}

Subspace Subspace::span_of(const std::vector<std::vector<Rational>>& vectors,
                           std::size_t ambient_dim) {
  if (vectors.empty()) return Subspace(ambient_dim);
  return Subspace(ambient_dim, RationalMatrix::from_rows(vectors));
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  return is_zero_vec(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::vector<Rational> Subspace::reduce(const std::vector<Rational>& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("reduce size mismatch");
  std::vector<Rational> r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    // Each basis row has a leading 1 at its pivot column.
    std::size_t p = 0;
    while (basis_(i, p) == 0) ++p;
    if (r[p] == 0) continue;
    Rational f = r[p];
    for (std::size_t j = p; j < ambient_; ++j) r[j] -= f * basis_(i, j);
  }
  return r;
}

std::vector<Rational> Subspace::pluecker() const {
  std::size_t k = dim();
  auto sets = combinations(ambient_, k);
  std::vector<Rational> v;
  v.reserve(sets.size());
  std::vector<std::size_t> all_rows(k);
  for (std::size_t i = 0; i < k; ++i) all_rows[i] = i;
  for (const auto& cols : sets) v.push_back(basis_.submatrix(all_rows, cols).det());
  for (auto& x : v)
    if (x != 0) {
      Rational inv = Rational(1) / x;
      for (auto& y : v) y *= inv;
      break;
    }
  return v;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  return Subspace(a.ambient_dim(), a.basis().vstack(b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_dim());
  // x*A = y*B  <=>  (x,y) in kernel of [A^T | -B^T].
  RationalMatrix stacked = a.basis().transpose().hstack(b.basis().transpose() * Rational(-1));
  RationalMatrix ker = stacked.kernel_basis();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    std::vector<Rational> v(a.ambient_dim(), Rational(0));
    for (std::size_t r = 0; r < a.dim(); ++r) {
      if (ker(i, r) == 0) continue;
      for (std::size_t j = 0; j < a.ambient_dim(); ++j)
        v[j] += ker(i, r) * a.basis()(r, j);
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span_of(rows, a.ambient_dim());
}

Subspace kernel(const RationalMatrix& m) {
  return Subspace(m.cols(), m.kernel_basis());
}

Subspace row_space(const RationalMatrix& m) { return Subspace(m.cols(), m); }

Subspace col_space(const RationalMatrix& m) {
  return Subspace(m.rows(), m.transpose());
}

std::vector<std::vector<Rational>> extend_basis(const RationalMatrix& base,
                                                const RationalMatrix& candidates) {
  std::vector<std::vector<Rational>> picked;
  RationalMatrix cur = base;
  std::size_t r = cur.rank();
  for (std::size_t i = 0; i < candidates.rows(); ++i) {
    RationalMatrix trial = cur.vstack(
        RationalMatrix::from_rows({candidates.row(i)}));
    if (trial.rank() > r) {
      cur = trial;
      ++r;
      picked.push_back(candidates.row(i));
    }
  }
  return picked;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    // Advance the rightmost index that can still move.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (cur[i] != i + n - k) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        i = k + 1;
        break;
      }
    }
    if (i != k + 1) break;
    if (k == 0) break;
  }
  if (k == 0) out = {{}};
  return out;
}

std::size_t comb_rank(std::size_t n, const std::vector<std::size_t>& set) {
  // Lexicographic rank of a sorted subset.
  std::size_t k = set.size(), rank = 0, prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = prev; c < set[i]; ++c) rank += binomial(n - c - 1, k - i - 1);
    prev = set[i] + 1;
  }
  return rank;
}

}  // namespace hinges
