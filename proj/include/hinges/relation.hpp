#pragma once

#include <optional>

#include "hinges/subspace.hpp"

namespace hinges {

// A linear relation V => W: a subspace of V (+) W, first dim_v coordinates
// belonging to V. Attribute subspaces are computed once at construction.
class LinearRelation {
 public:
  LinearRelation(std::size_t dim_v, std::size_t dim_w, Subspace space);

  static LinearRelation from_span(std::size_t dim_v, std::size_t dim_w,
                                  const std::vector<std::vector<Rational>>& vectors);
  static LinearRelation zero_relation(std::size_t dim_v, std::size_t dim_w);

  std::size_t dim_v() const { return dim_v_; }
  std::size_t dim_w() const { return dim_w_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  const Subspace& ker() const { return ker_; }      // subset of V
  const Subspace& image() const { return im_; }     // subset of W
  const Subspace& dom() const { return dom_; }      // subset of V
  const Subspace& indef() const { return indef_; }  // subset of W
  std::size_t rk() const { return rk_; }

  bool operator==(const LinearRelation& o) const {
    return dim_v_ == o.dim_v_ && dim_w_ == o.dim_w_ && space_ == o.space_;
  }
  bool operator!=(const LinearRelation& o) const { return !(*this == o); }

 private:
  std::size_t dim_v_, dim_w_;
  Subspace space_;
  Subspace ker_, im_, dom_, indef_;
  std::size_t rk_;
};

// Morphism of the category of relations: a relation or the absorbing null.
struct GaMorphism {
  std::size_t dim_v, dim_w;
  std::optional<LinearRelation> rel;  // nullopt encodes null

  static GaMorphism null(std::size_t dv, std::size_t dw) { return {dv, dw, std::nullopt}; }
  static GaMorphism of(LinearRelation r) {
    std::size_t dv = r.dim_v(), dw = r.dim_w();
    return {dv, dw, std::move(r)};
  }
  bool is_null() const { return !rel.has_value(); }
};

// Relation with the same subspace of V (+) W read as a subspace of W (+) V.
LinearRelation graph(const RationalMatrix& a);  // a maps V -> W, shape dim_w x dim_v
LinearRelation pseudoinverse(const LinearRelation& p);
LinearRelation scale(const Rational& c, const LinearRelation& p);  // v (+) c*w

// Set-theoretic relation product q . p (p acts first).
LinearRelation relation_product(const LinearRelation& q, const LinearRelation& p);

// Product in the category: null when the transversality conditions
// Im p + Dom q = W or Indef p  /\  Ker q = 0 fail.
GaMorphism compose(const GaMorphism& q, const GaMorphism& p);

// dim(space) == dim V, the semigroup condition for square relations.
bool in_gamma(const LinearRelation& p);

// Adapted bases: rows of basis_v are f_1..f_alpha, g_1..g_beta, h_1..h_gamma;
// rows of basis_w are F_1..F_mu, G_1..G_beta, H_1..H_nu. The relation is
// spanned by 0(+)F_k, g_j(+)G_j, h_i(+)0.
struct RelationCanonicalForm {
  std::size_t dim_v = 0, dim_w = 0;
  std::size_t alpha = 0, beta = 0, gamma = 0, mu = 0, nu = 0;
  RationalMatrix basis_v;  // dim_v x dim_v, invertible
  RationalMatrix basis_w;  // dim_w x dim_w, invertible
};

RelationCanonicalForm canonical_form(const LinearRelation& s);
LinearRelation reconstruct(const RelationCanonicalForm& f);

// The scalar s with q = s * p, when one exists. Unique for positive-rank
// relations; rank-zero relations are scaling fixed points, reported as 1.
std::optional<Rational> relation_scale_factor(const LinearRelation& p,
                                              const LinearRelation& q);

}  // namespace hinges
