#include "hinges/hinge.hpp"

#include <algorithm>

namespace hinges {

Hinge validate_hinge(const std::vector<LinearRelation>& terms) {
  if (terms.empty()) throw HingeAxiomError("empty", 0, "hinge needs at least one term");
  std::size_t n = terms[0].dim_v();
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (terms[j].dim_v() != n || terms[j].dim_w() != n)
      throw HingeAxiomError("ambient", j, "term is not a relation V => V");
    if (terms[j].dim() != n)
      throw HingeAxiomError("dimension", j, "term dimension differs from dim V");
  }
  for (std::size_t j = 0; j + 1 < terms.size(); ++j) {
    if (terms[j].ker() != terms[j + 1].dom())
      throw HingeAxiomError("chain_kernel_domain", j,
                            "kernel of term does not equal domain of the next term");
    if (terms[j].image() != terms[j + 1].indef())
      throw HingeAxiomError("chain_image_indef", j,
                            "image of term does not equal indefiniteness of the next term");
  }
  if (terms.front().dom().dim() != n)
    throw HingeAxiomError("first_term_domain", 0, "first term must be defined on all of V");
  if (terms.back().image().dim() != n)
    throw HingeAxiomError("last_term_image", terms.size() - 1,
                          "last term must have full image");
  for (std::size_t j = 0; j < terms.size(); ++j)
    if (terms[j].rk() == 0)
      throw HingeAxiomError("positive_rank", j, "term has rank zero");
  return Hinge(n, terms);
}

Hinge hinge_from_flags(const std::vector<Subspace>& y_flag,
                       const std::vector<Subspace>& z_flag,
                       const std::vector<RationalMatrix>& step_maps) {
  if (y_flag.size() < 2 || y_flag.size() != z_flag.size() ||
      step_maps.size() + 1 != y_flag.size())
    throw std::invalid_argument("flag data sizes do not match");
  std::size_t k = step_maps.size();
  std::size_t n = y_flag[0].ambient_dim();
  if (y_flag[0].dim() != 0 || y_flag[k].dim() != n || z_flag[0].dim() != n ||
      z_flag[k].dim() != 0)
    throw std::invalid_argument("flags must run from zero to full space");
  std::vector<LinearRelation> terms(
      k, LinearRelation::zero_relation(n, n));  // placeholder, overwritten below
  for (std::size_t j = 1; j <= k; ++j) {
    if (!y_flag[j].contains(y_flag[j - 1]) || !z_flag[j - 1].contains(z_flag[j]))
      throw std::invalid_argument("flags are not nested");
    std::size_t step = y_flag[j].dim() - y_flag[j - 1].dim();
    if (z_flag[j - 1].dim() - z_flag[j].dim() != step)
      throw std::invalid_argument("flag step sizes disagree");
    const RationalMatrix& a = step_maps[j - 1];
    if (a.rows() != step || a.cols() != step || a.det() == 0)
      throw std::invalid_argument("step map must be invertible of the step size");
    auto y_reps = extend_basis(y_flag[j - 1].basis(), y_flag[j].basis());
    auto z_reps = extend_basis(z_flag[j].basis(), z_flag[j - 1].basis());
    std::vector<std::vector<Rational>> rows;
    for (std::size_t s = 0; s < step; ++s) {
      std::vector<Rational> v(2 * n, Rational(0));
      for (std::size_t c = 0; c < n; ++c) v[c] = y_reps[s][c];
      for (std::size_t r = 0; r < step; ++r)
        if (a(r, s) != 0)
          for (std::size_t c = 0; c < n; ++c) v[n + c] += a(r, s) * z_reps[r][c];
      rows.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < y_flag[j - 1].dim(); ++i) {
      std::vector<Rational> v(2 * n, Rational(0));
      for (std::size_t c = 0; c < n; ++c) v[c] = y_flag[j - 1].basis()(i, c);
      rows.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < z_flag[j].dim(); ++i) {
      std::vector<Rational> v(2 * n, Rational(0));
      for (std::size_t c = 0; c < n; ++c) v[n + c] = z_flag[j].basis()(i, c);
      rows.push_back(std::move(v));
    }
    terms[k - j] = LinearRelation::from_span(n, n, rows);
  }
  return validate_hinge(terms);
}

Hinge canonical_hinge(const OrbitLabel& alpha) {
  std::size_t n = 0;
  for (auto a : alpha) {
    if (a == 0) throw std::invalid_argument("composition parts must be positive");
    n += a;
  }
  if (n == 0) throw std::invalid_argument("empty composition");
  std::vector<std::size_t> u(alpha.size() + 1, 0);
  for (std::size_t j = 0; j < alpha.size(); ++j) u[j + 1] = u[j] + alpha[j];
  std::vector<LinearRelation> terms;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t s = 0; s < u[j]; ++s) {
      std::vector<Rational> v(2 * n, Rational(0));
      v[n + s] = 1;
      rows.push_back(std::move(v));
    }
    for (std::size_t t = u[j]; t < u[j + 1]; ++t) {
      std::vector<Rational> v(2 * n, Rational(0));
      v[t] = 1;
      v[n + t] = 1;
      rows.push_back(std::move(v));
    }
    for (std::size_t m = u[j + 1]; m < n; ++m) {
      std::vector<Rational> v(2 * n, Rational(0));
      v[m] = 1;
      rows.push_back(std::move(v));
    }
    terms.push_back(LinearRelation::from_span(n, n, rows));
  }
  return validate_hinge(terms);
}

OrbitLabel orbit_label(const Hinge& h) {
  OrbitLabel a;
  for (const auto& p : h.terms()) a.push_back(p.rk());
  return a;
}

Hinge act(const RationalMatrix& g1, const Hinge& h, const RationalMatrix& g2) {
  if (g1.det() == 0 || g2.det() == 0)
    throw std::invalid_argument("act requires invertible matrices");
  GaMorphism m1 = GaMorphism::of(graph(g1)), m2 = GaMorphism::of(graph(g2));
  std::vector<LinearRelation> terms;
  for (const auto& p : h.terms()) {
    GaMorphism r = compose(m1, compose(GaMorphism::of(p), m2));
    if (r.is_null()) throw std::logic_error("act produced null");
    terms.push_back(*r.rel);
  }
  return validate_hinge(terms);
}

WeakHinge validate_weak(std::size_t n, const std::vector<LinearRelation>& terms) {
  if (terms.empty()) throw std::invalid_argument("weak hinge needs at least one term");
  for (const auto& t : terms)
    if (t.dim_v() != n || t.dim_w() != n || t.dim() != n)
      throw std::invalid_argument("weak hinge term is not n-dimensional on V => V");
  for (std::size_t j = 0; j + 1 < terms.size(); ++j) {
    if (!terms[j].ker().contains(terms[j + 1].dom()))
      throw std::invalid_argument("weak chain: kernel does not contain next domain");
    if (!terms[j + 1].indef().contains(terms[j].image()))
      throw std::invalid_argument("weak chain: next indefiniteness does not contain image");
  }
  return WeakHinge{n, terms};
}

namespace {
LinearRelation rank_zero_spacer(const Subspace& ker_part, const Subspace& im_part) {
  std::size_t n = ker_part.ambient_dim();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < ker_part.dim(); ++i) {
    std::vector<Rational> v(2 * n, Rational(0));
    for (std::size_t c = 0; c < n; ++c) v[c] = ker_part.basis()(i, c);
    rows.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < im_part.dim(); ++i) {
    std::vector<Rational> v(2 * n, Rational(0));
    for (std::size_t c = 0; c < n; ++c) v[n + c] = im_part.basis()(i, c);
    rows.push_back(std::move(v));
  }
  return LinearRelation::from_span(n, n, rows);
}
}  // namespace

WeakHinge completed(const Hinge& h) {
  std::size_t n = h.n();
  std::vector<LinearRelation> terms;
  terms.push_back(rank_zero_spacer(Subspace::full(n), Subspace(n)));
  for (std::size_t j = 0; j < h.size(); ++j) {
    terms.push_back(h.terms()[j]);
    if (j + 1 < h.size())
      terms.push_back(rank_zero_spacer(h.terms()[j].ker(), h.terms()[j].image()));
  }
  terms.push_back(rank_zero_spacer(Subspace(n), Subspace::full(n)));
  return validate_weak(n, terms);
}

WeakHinge weak_product(const WeakHinge& t, const WeakHinge& r) {
  if (t.n != r.n) throw std::invalid_argument("weak product: ambient mismatch");
  std::vector<LinearRelation> products;
  for (const auto& ti : t.terms)
    for (const auto& rj : r.terms) {
      GaMorphism m = compose(GaMorphism::of(ti), GaMorphism::of(rj));
      if (m.is_null()) continue;
      if (std::find(products.begin(), products.end(), *m.rel) == products.end())
        products.push_back(*m.rel);
    }
  if (products.empty()) throw std::logic_error("weak product is empty");
  std::stable_sort(products.begin(), products.end(),
                   [](const LinearRelation& a, const LinearRelation& b) {
                     if (a.indef().dim() != b.indef().dim())
                       return a.indef().dim() < b.indef().dim();
                     return a.image().dim() < b.image().dim();
                   });
  return validate_weak(t.n, products);
}

ExteriorOperator hinge_lambda_m(const Hinge& h, std::size_t m) {
  if (m > h.n()) throw std::invalid_argument("degree out of range");
  std::vector<std::size_t> nonzero;
  std::vector<ExteriorOperator> ops;
  for (std::size_t j = 0; j < h.size(); ++j) {
    ops.push_back(lambda_m(h.terms()[j], m));
    if (!ops.back().mat.is_zero()) nonzero.push_back(j);
  }
  if (nonzero.size() == 1) return ops[nonzero[0]];
  if (nonzero.size() == 2 && nonzero[1] == nonzero[0] + 1) {
    if (!proportionality(ops[nonzero[0]].mat, ops[nonzero[1]].mat))
      throw std::logic_error("adjacent degree blocks are not proportional");
    return ops[nonzero[0]];
  }
  throw std::logic_error("degree block pattern violates the hinge alternative");
}

GluedFamily glue(const Hinge& h) {
  std::size_t n = h.n();
  // First term has full domain and no indefiniteness: it is an operator.
  const RationalMatrix& b0 = h.terms()[0].space().basis();
  RationalMatrix a0(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a0(j, i) = b0(i, n + j);  // A = right block^T
  std::vector<RationalMatrix> blocks(n + 1);
  std::size_t hi = h.terms()[0].image().dim();
  for (std::size_t m = 0; m <= hi; ++m) blocks[m] = lambda_cha(a0, m).mat;
  RationalMatrix prev_overlap = blocks[hi];
  for (std::size_t j = 1; j < h.size(); ++j) {
    LambdaFamily fam = lambda_relation(h.terms()[j]);
    std::size_t lo = h.terms()[j].indef().dim();
    std::size_t up = h.terms()[j].image().dim();
    auto c = proportionality(prev_overlap, fam.blocks[lo].mat);
    if (!c || *c == 0) throw std::logic_error("gluing overlap is not proportional");
    for (std::size_t m = lo + 1; m <= up; ++m) blocks[m] = fam.blocks[m].mat * *c;
    prev_overlap = blocks[up];
  }
  return GluedFamily{n, std::move(blocks), completed(h)};
}

bool well_glued(const GluedFamily& f) {
  std::vector<bool> covered(f.n + 1, false);
  for (std::size_t j = 0; j < f.under.terms.size(); ++j) {
    const LinearRelation& r = f.under.terms[j];
    std::size_t lo = r.indef().dim(), up = r.image().dim();
    std::optional<Rational> cj;
    for (std::size_t m = lo; m <= up; ++m) {
      covered[m] = true;
      RationalMatrix lam = lambda_m(r, m).mat;
      if (lam.is_zero()) return false;  // support must be the full interval
      auto c = proportionality(f.blocks[m], lam);
      if (!c) return false;
      if (!cj)
        cj = c;
      else if (*cj != *c)
        return false;
    }
    if (cj && *cj == 0) return false;
    if (j == 0 && r.dom().dim() == f.n && r.indef().dim() == 0) {
      // Leading operator term: its blocks must be the exact compounds.
      const RationalMatrix& b = r.space().basis();
      RationalMatrix a(f.n, f.n);
      for (std::size_t i = 0; i < f.n; ++i)
        for (std::size_t c = 0; c < f.n; ++c) a(c, i) = b(i, f.n + c);
      for (std::size_t m = lo; m <= up; ++m)
        if (f.blocks[m] != lambda_cha(a, m).mat) return false;
    }
  }
  for (std::size_t m = 0; m <= f.n; ++m)
    if (!covered[m] && !f.blocks[m].is_zero()) return false;
  return true;
}

GluedFamily glued_product(const GluedFamily& a, const GluedFamily& b) {
  if (a.n != b.n) throw std::invalid_argument("glued product: ambient mismatch");
  std::vector<RationalMatrix> blocks(a.n + 1);
  for (std::size_t m = 0; m <= a.n; ++m) blocks[m] = a.blocks[m] * b.blocks[m];
  return GluedFamily{a.n, std::move(blocks), weak_product(a.under, b.under)};
}

GluedFamily identity_glued(std::size_t n) {
  return glue(validate_hinge({graph(RationalMatrix::identity(n))}));
}

bool hinge_star_equal(const Hinge& a, const Hinge& b) {
  if (a.n() != b.n() || a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto s = relation_scale_factor(a.terms()[j], b.terms()[j]);
    if (!s || *s == 0) return false;
  }
  return true;
}

std::vector<OrbitLabel> compositions(std::size_t n) {
  std::vector<OrbitLabel> out;
  if (n == 0) return out;
  OrbitLabel cur;
  // Depth-first over first parts.
  struct Rec {
    std::vector<OrbitLabel>& out;
    OrbitLabel& cur;
    void go(std::size_t rest) {
      if (rest == 0) {
        out.push_back(cur);
        return;
      }
      for (std::size_t first = 1; first <= rest; ++first) {
        cur.push_back(first);
        go(rest - first);
        cur.pop_back();
      }
    }
  } rec{out, cur};
  rec.go(n);
  return out;
}

}  // namespace hinges
