#include "hinges/exterior.hpp"

#include <stdexcept>

namespace hinges {

ExteriorOperator lambda_cha(const RationalMatrix& a, std::size_t k) {
  std::size_t n_in = a.cols(), n_out = a.rows();
  if (k > n_in && k > n_out)
    throw std::invalid_argument("lambda_cha: degree exceeds both dimensions");
  auto cols_sets = combinations(n_in, k);
  auto rows_sets = combinations(n_out, k);
  ExteriorOperator op{n_in, n_out, k, k,
                      RationalMatrix(rows_sets.size(), cols_sets.size())};
  for (std::size_t r = 0; r < rows_sets.size(); ++r)
    for (std::size_t c = 0; c < cols_sets.size(); ++c)
      op.mat(r, c) = a.submatrix(rows_sets[r], cols_sets[c]).det();
  return op;
}

namespace {

// Block of the adapted-basis operator: in the bases f,g,h of V and F,G,H of
// W it fixes f_all ^ g_subset |-> F_all ^ G_subset and kills every other
// wedge monomial. Both sides are sorted in adapted order, so no signs occur.
RationalMatrix adapted_block(const RelationCanonicalForm& f, std::size_t k_in,
                             std::size_t k_out) {
  auto in_sets = combinations(f.dim_v, k_in);
  auto out_sets = combinations(f.dim_w, k_out);
  RationalMatrix m(out_sets.size(), in_sets.size());
  for (std::size_t c = 0; c < in_sets.size(); ++c) {
    const auto& I = in_sets[c];
    bool ok = true;
    std::vector<std::size_t> J;
    for (std::size_t t = 0; t < f.mu; ++t) J.push_back(t);
    std::size_t f_seen = 0;
    for (auto idx : I) {
      if (idx < f.alpha) {
        ++f_seen;
      } else if (idx < f.alpha + f.beta) {
        J.push_back(f.mu + (idx - f.alpha));
      } else {
        ok = false;  // touches the kernel directions
        break;
      }
    }
    if (!ok || f_seen != f.alpha) continue;
    if (J.size() != k_out) continue;
    m(comb_rank(f.dim_w, J), c) = 1;
  }
  return m;
}

}  // namespace

LambdaFamily lambda_relation(const LinearRelation& s) {
  RelationCanonicalForm f = canonical_form(s);
  LambdaFamily fam;
  fam.dim_v = s.dim_v();
  fam.dim_w = s.dim_w();
  fam.shift = static_cast<long>(s.dim()) - static_cast<long>(s.dim_v());
  // Change of basis: adapted vectors are the columns of these matrices.
  RationalMatrix bv_cols_inv = f.basis_v.transpose().inverse();
  RationalMatrix bw_cols = f.basis_w.transpose();
  for (std::size_t k = 0; k <= s.dim_v(); ++k) {
    long kout = static_cast<long>(k) + fam.shift;
    ExteriorOperator op{s.dim_v(), s.dim_w(), k, 0, RationalMatrix()};
    if (kout < 0 || kout > static_cast<long>(s.dim_w())) {
      // No legal output degree; the 0x0 matrix marks the zero block.
      fam.blocks.push_back(std::move(op));
      continue;
    }
    op.k_out = static_cast<std::size_t>(kout);
    RationalMatrix core = adapted_block(f, k, op.k_out);
    op.mat = lambda_cha(bw_cols, op.k_out).mat * core * lambda_cha(bv_cols_inv, k).mat;
    fam.blocks.push_back(std::move(op));
  }
  return fam;
}

ExteriorOperator lambda_m(const LinearRelation& p, std::size_t m) {
  if (!in_gamma(p)) throw std::invalid_argument("lambda_m requires dim P = dim V = dim W");
  if (m > p.dim_v()) throw std::invalid_argument("degree out of range");
  return lambda_relation(p).blocks[m];
}

std::optional<Rational> proportionality(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  if (b.is_zero()) return a.is_zero() ? std::optional<Rational>(Rational(1)) : std::nullopt;
  Rational c(0);
  for (std::size_t i = 0; i < b.rows() && c == 0; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j) != 0) {
        c = a(i, j) / b(i, j);
        break;
      }
  if (a != b * c) return std::nullopt;
  return c;
}

}  // namespace hinges
