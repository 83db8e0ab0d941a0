#pragma once

#include <stdexcept>
#include <string>

#include "hinges/exterior.hpp"

namespace hinges {

// Identifies which chain condition failed and at which term (0-based).
struct HingeAxiomError : std::runtime_error {
  HingeAxiomError(std::string axiom_, std::size_t index_, const std::string& what_)
      : std::runtime_error(what_), axiom(std::move(axiom_)), index(index_) {}
  std::string axiom;
  std::size_t index;
};

using OrbitLabel = std::vector<std::size_t>;  // composition of n, entries >= 1

// Ordered chain of n-dimensional relations V => V with matching
// kernel/domain and image/indefiniteness, full domain at the start, full
// image at the end, and positive rank everywhere.
class Hinge {
 public:
  std::size_t n() const { return n_; }
  const std::vector<LinearRelation>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool operator==(const Hinge& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  friend Hinge validate_hinge(const std::vector<LinearRelation>& terms);
  Hinge(std::size_t n, std::vector<LinearRelation> terms)
      : n_(n), terms_(std::move(terms)) {}
  std::size_t n_;
  std::vector<LinearRelation> terms_;
};

// Checks every chain axiom; throws HingeAxiomError naming the first failure.
Hinge validate_hinge(const std::vector<LinearRelation>& terms);

// Alternate constructor from flag data: an increasing flag 0=Y_0 c ... c Y_k = V,
// a decreasing flag V=Z_0 ) ... ) Z_k = 0 with matching step sizes, and an
// invertible step map per level (step s of Y to step s of Z).
Hinge hinge_from_flags(const std::vector<Subspace>& y_flag,
                       const std::vector<Subspace>& z_flag,
                       const std::vector<RationalMatrix>& step_maps);

Hinge canonical_hinge(const OrbitLabel& alpha);
OrbitLabel orbit_label(const Hinge& h);

// Termwise g1 . P_j . g2 for invertible g1, g2.
Hinge act(const RationalMatrix& g1, const Hinge& h, const RationalMatrix& g2);

// Relation chains with containment instead of equality in the matching
// conditions; closed under termwise products.
struct WeakHinge {
  std::size_t n = 0;
  std::vector<LinearRelation> terms;
};

WeakHinge validate_weak(std::size_t n, const std::vector<LinearRelation>& terms);

// The completed chain (Q_0, P_1, Q_1, ..., P_k, Q_k) with rank-0 spacers
// Q_j = Ker P_j (+) Im P_j, Q_0 = V (+) 0, Q_k = 0 (+) V.
WeakHinge completed(const Hinge& h);

// All non-null pairwise products t_i r_j, deduplicated, ordered by support.
WeakHinge weak_product(const WeakHinge& t, const WeakHinge& r);

// The unique-up-to-scalar nonzero degree-m operator of the chain.
ExteriorOperator hinge_lambda_m(const Hinge& h, std::size_t m);

// Element of the reduced hinge semigroup: one operator per exterior degree,
// lying over a weak hinge, satisfying the gluing conditions.
struct GluedFamily {
  std::size_t n = 0;
  std::vector<RationalMatrix> blocks;  // blocks[m] acts on degree m, size C(n,m)
  WeakHinge under;
};

// Canonical normalization: the first term is an operator and keeps its exact
// compound matrices; each later term is scaled to agree on the shared
// rank-one degree with its predecessor.
GluedFamily glue(const Hinge& h);

bool well_glued(const GluedFamily& f);

GluedFamily glued_product(const GluedFamily& a, const GluedFamily& b);

GluedFamily identity_glued(std::size_t n);

// Projective equality: the same chain up to a nonzero scalar on each term.
bool hinge_star_equal(const Hinge& a, const Hinge& b);

// All compositions of n (there are 2^(n-1)).
std::vector<OrbitLabel> compositions(std::size_t n);

}  // namespace hinges
