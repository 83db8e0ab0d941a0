#include "hinges/relation.hpp"

#include <stdexcept>

namespace hinges {

namespace {

// Vectors of `space` lying in the block `lo..lo+len`, all other coordinates
// zero, projected onto that block.
Subspace block_slice(const Subspace& space, std::size_t lo, std::size_t len) {
  const RationalMatrix& b = space.basis();
  std::size_t amb = space.ambient_dim();
  // Combination rows x with (x*B) zero outside the block.
  std::vector<std::size_t> outside;
  for (std::size_t j = 0; j < amb; ++j)
    if (j < lo || j >= lo + len) outside.push_back(j);
  std::vector<std::size_t> all_rows(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) all_rows[i] = i;
  RationalMatrix restr = b.submatrix(all_rows, outside);  // rows x outside
  RationalMatrix ker = restr.transpose().kernel_basis();  // combos x
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    std::vector<Rational> v(len, Rational(0));
    for (std::size_t r = 0; r < b.rows(); ++r) {
      if (ker(i, r) == 0) continue;
      for (std::size_t j = 0; j < len; ++j) v[j] += ker(i, r) * b(r, lo + j);
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span_of(rows, len);
}

Subspace block_projection(const Subspace& space, std::size_t lo, std::size_t len) {
  const RationalMatrix& b = space.basis();
  std::vector<std::size_t> cols(len);
  for (std::size_t j = 0; j < len; ++j) cols[j] = lo + j;
  std::vector<std::size_t> all_rows(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) all_rows[i] = i;
  return Subspace(len, b.submatrix(all_rows, cols));
}

}  // namespace

LinearRelation::LinearRelation(std::size_t dim_v, std::size_t dim_w, Subspace space)
    : dim_v_(dim_v),
      dim_w_(dim_w),
      space_(std::move(space)),
      ker_(block_slice(space_, 0, dim_v)),
      im_(block_projection(space_, dim_v, dim_w)),
      dom_(block_projection(space_, 0, dim_v)),
      indef_(block_slice(space_, dim_v, dim_w)),
      rk_(space_.dim() - ker_.dim() - indef_.dim()) {
  if (space_.ambient_dim() != dim_v + dim_w)
    throw std::invalid_argument("relation ambient dimension mismatch");
}

LinearRelation LinearRelation::from_span(
    std::size_t dim_v, std::size_t dim_w,
    const std::vector<std::vector<Rational>>& vectors) {
  return LinearRelation(dim_v, dim_w, Subspace::span_of(vectors, dim_v + dim_w));
}

LinearRelation LinearRelation::zero_relation(std::size_t dim_v, std::size_t dim_w) {
  return LinearRelation(dim_v, dim_w, Subspace(dim_v + dim_w));
}

LinearRelation graph(const RationalMatrix& a) {
  std::size_t dv = a.cols(), dw = a.rows();
  // Rows e_i (+) A e_i, i.e. [I | A^T]; already in RREF.
  RationalMatrix rows = RationalMatrix::identity(dv).hstack(a.transpose());
  return LinearRelation(dv, dw, Subspace(dv + dw, rows));
}

LinearRelation pseudoinverse(const LinearRelation& p) {
  const RationalMatrix& b = p.space().basis();
  std::vector<std::size_t> perm;
  for (std::size_t j = 0; j < p.dim_w(); ++j) perm.push_back(p.dim_v() + j);
  for (std::size_t j = 0; j < p.dim_v(); ++j) perm.push_back(j);
  std::vector<std::size_t> all_rows(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) all_rows[i] = i;
  return LinearRelation(p.dim_w(), p.dim_v(),
                        Subspace(p.dim_v() + p.dim_w(), b.submatrix(all_rows, perm)));
}

LinearRelation scale(const Rational& c, const LinearRelation& p) {
  if (c == 0) throw std::invalid_argument("scale by zero");
  RationalMatrix b = p.space().basis();
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = p.dim_v(); j < p.dim_v() + p.dim_w(); ++j) b(i, j) *= c;
  return LinearRelation(p.dim_v(), p.dim_w(), Subspace(p.dim_v() + p.dim_w(), b));
}

LinearRelation relation_product(const LinearRelation& q, const LinearRelation& p) {
  if (p.dim_w() != q.dim_v())
    throw std::invalid_argument("relation product: middle dimension mismatch");
  std::size_t dv = p.dim_v(), dw = p.dim_w(), dy = q.dim_w();
  // Triples (v,w,y) with v(+)w in P and w(+)y in Q, then drop w.
  std::vector<std::vector<Rational>> pad_p, pad_q;
  const RationalMatrix& bp = p.space().basis();
  for (std::size_t i = 0; i < bp.rows(); ++i) {
    std::vector<Rational> v(dv + dw + dy, Rational(0));
    for (std::size_t j = 0; j < dv + dw; ++j) v[j] = bp(i, j);
    pad_p.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < dy; ++j) {
    std::vector<Rational> v(dv + dw + dy, Rational(0));
    v[dv + dw + j] = 1;
    pad_p.push_back(std::move(v));
  }
  const RationalMatrix& bq = q.space().basis();
  for (std::size_t j = 0; j < dv; ++j) {
    std::vector<Rational> v(dv + dw + dy, Rational(0));
    v[j] = 1;
    pad_q.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < bq.rows(); ++i) {
    std::vector<Rational> v(dv + dw + dy, Rational(0));
    for (std::size_t j = 0; j < dw + dy; ++j) v[dv + j] = bq(i, j);
    pad_q.push_back(std::move(v));
  }
  Subspace t = subspace_intersect(Subspace::span_of(pad_p, dv + dw + dy),
                                  Subspace::span_of(pad_q, dv + dw + dy));
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < dv; ++j) keep.push_back(j);
  for (std::size_t j = 0; j < dy; ++j) keep.push_back(dv + dw + j);
  std::vector<std::size_t> all_rows(t.basis().rows());
  for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
  return LinearRelation(dv, dy,
                        Subspace(dv + dy, t.basis().submatrix(all_rows, keep)));
}

GaMorphism compose(const GaMorphism& q, const GaMorphism& p) {
  if (p.dim_w != q.dim_v)
    throw std::invalid_argument("compose: middle dimension mismatch");
  if (p.is_null() || q.is_null()) return GaMorphism::null(p.dim_v, q.dim_w);
  // Transversality: Im P + Dom Q = W and Indef P /\ Ker Q = 0.
  const LinearRelation& rp = *p.rel;
  const LinearRelation& rq = *q.rel;
  if (subspace_sum(rp.image(), rq.dom()).dim() != rp.dim_w())
    return GaMorphism::null(p.dim_v, q.dim_w);
  if (subspace_intersect(rp.indef(), rq.ker()).dim() != 0)
    return GaMorphism::null(p.dim_v, q.dim_w);
  return GaMorphism::of(relation_product(rq, rp));
}

bool in_gamma(const LinearRelation& p) {
  return p.dim_v() == p.dim_w() && p.dim() == p.dim_v();
}

RelationCanonicalForm canonical_form(const LinearRelation& s) {
  RelationCanonicalForm f;
  f.dim_v = s.dim_v();
  f.dim_w = s.dim_w();
  f.gamma = s.ker().dim();
  f.mu = s.indef().dim();
  f.beta = s.rk();

  // V side: h spans Ker, g extends it to Dom, f extends to all of V.
  std::vector<std::vector<Rational>> h_rows, g_rows, f_rows;
  for (std::size_t i = 0; i < f.gamma; ++i) h_rows.push_back(s.ker().basis().row(i));
  RationalMatrix hmat = f.gamma ? RationalMatrix::from_rows(h_rows)
                                : RationalMatrix(0, f.dim_v);
  g_rows = extend_basis(hmat, s.dom().basis());
  RationalMatrix dom_mat = hmat;
  for (const auto& g : g_rows) dom_mat = dom_mat.vstack(RationalMatrix::from_rows({g}));
  f_rows = extend_basis(dom_mat, RationalMatrix::identity(f.dim_v));
  f.alpha = f_rows.size();

  // W side: F spans Indef, G_j is the unique partner of g_j modulo Indef,
  // H extends Im to all of W.
  std::vector<std::vector<Rational>> F_rows, G_rows, H_rows;
  for (std::size_t i = 0; i < f.mu; ++i) F_rows.push_back(s.indef().basis().row(i));
  const RationalMatrix& b = s.space().basis();
  std::vector<std::size_t> vcols(f.dim_v), wcols(f.dim_w);
  for (std::size_t j = 0; j < f.dim_v; ++j) vcols[j] = j;
  for (std::size_t j = 0; j < f.dim_w; ++j) wcols[j] = f.dim_v + j;
  std::vector<std::size_t> all_rows(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) all_rows[i] = i;
  RationalMatrix bv = b.submatrix(all_rows, vcols).transpose();  // dim_v x dim
  RationalMatrix bw = b.submatrix(all_rows, wcols);              // dim x dim_w
  for (const auto& g : g_rows) {
    auto x = solve(bv, g);
    if (!x) throw std::logic_error("canonical_form: g outside Dom");
    std::vector<Rational> w(f.dim_w, Rational(0));
    for (std::size_t r = 0; r < bw.rows(); ++r) {
      if ((*x)[r] == 0) continue;
      for (std::size_t j = 0; j < f.dim_w; ++j) w[j] += (*x)[r] * bw(r, j);
    }
    G_rows.push_back(s.indef().reduce(w));
  }
  std::vector<std::vector<Rational>> fg = F_rows;
  fg.insert(fg.end(), G_rows.begin(), G_rows.end());
  RationalMatrix im_part =
      fg.empty() ? RationalMatrix(0, f.dim_w) : RationalMatrix::from_rows(fg);
  H_rows = extend_basis(im_part, RationalMatrix::identity(f.dim_w));
  f.nu = H_rows.size();

  std::vector<std::vector<Rational>> v_all = f_rows;
  v_all.insert(v_all.end(), g_rows.begin(), g_rows.end());
  v_all.insert(v_all.end(), h_rows.begin(), h_rows.end());
  std::vector<std::vector<Rational>> w_all = F_rows;
  w_all.insert(w_all.end(), G_rows.begin(), G_rows.end());
  w_all.insert(w_all.end(), H_rows.begin(), H_rows.end());
  f.basis_v = RationalMatrix::from_rows(v_all);
  f.basis_w = RationalMatrix::from_rows(w_all);
  return f;
}

std::optional<Rational> relation_scale_factor(const LinearRelation& p,
                                              const LinearRelation& q) {
  if (p.dim_v() != q.dim_v() || p.dim_w() != q.dim_w()) return std::nullopt;
  if (p.dom() != q.dom() || p.ker() != q.ker() || p.image() != q.image() ||
      p.indef() != q.indef())
    return std::nullopt;
  if (p.rk() == 0) return p == q ? std::optional<Rational>(Rational(1)) : std::nullopt;
  std::size_t dv = p.dim_v(), dw = p.dim_w();
  const RationalMatrix& b = p.space().basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::vector<Rational> full = b.row(i);
    std::vector<Rational> v(full.begin(), full.begin() + dv);
    if (p.ker().contains(v)) continue;
    std::vector<Rational> w0(full.begin() + dv, full.end());
    // Partner of v inside q, well defined modulo the shared indefiniteness.
    const RationalMatrix& bq = q.space().basis();
    std::vector<std::size_t> all_rows(bq.rows());
    for (std::size_t r = 0; r < bq.rows(); ++r) all_rows[r] = r;
    std::vector<std::size_t> vcols(dv), wcols(dw);
    for (std::size_t j = 0; j < dv; ++j) vcols[j] = j;
    for (std::size_t j = 0; j < dw; ++j) wcols[j] = dv + j;
    auto x = solve(bq.submatrix(all_rows, vcols).transpose(), v);
    if (!x) return std::nullopt;
    std::vector<Rational> w1(dw, Rational(0));
    RationalMatrix bw = bq.submatrix(all_rows, wcols);
    for (std::size_t r = 0; r < bq.rows(); ++r) {
      if ((*x)[r] == 0) continue;
      for (std::size_t j = 0; j < dw; ++j) w1[j] += (*x)[r] * bw(r, j);
    }
    std::vector<Rational> r0 = p.indef().reduce(w0), r1 = p.indef().reduce(w1);
    Rational s(0);
    for (std::size_t j = 0; j < dw; ++j)
      if (r0[j] != 0) {
        s = r1[j] / r0[j];
        break;
      }
    if (s == 0) return std::nullopt;
    if (scale(s, p) == q) return s;
    return std::nullopt;
  }
  return std::nullopt;
}

LinearRelation reconstruct(const RelationCanonicalForm& f) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t k = 0; k < f.mu; ++k) {
    std::vector<Rational> v(f.dim_v + f.dim_w, Rational(0));
    for (std::size_t j = 0; j < f.dim_w; ++j) v[f.dim_v + j] = f.basis_w(k, j);
    rows.push_back(std::move(v));
  }
  for (std::size_t k = 0; k < f.beta; ++k) {
    std::vector<Rational> v(f.dim_v + f.dim_w, Rational(0));
    for (std::size_t j = 0; j < f.dim_v; ++j) v[j] = f.basis_v(f.alpha + k, j);
    for (std::size_t j = 0; j < f.dim_w; ++j) v[f.dim_v + j] = f.basis_w(f.mu + k, j);
    rows.push_back(std::move(v));
  }
  for (std::size_t k = 0; k < f.gamma; ++k) {
    std::vector<Rational> v(f.dim_v + f.dim_w, Rational(0));
    for (std::size_t j = 0; j < f.dim_v; ++j) v[j] = f.basis_v(f.alpha + f.beta + k, j);
    rows.push_back(std::move(v));
  }
  return LinearRelation::from_span(f.dim_v, f.dim_w, rows);
}

}  // namespace hinges
