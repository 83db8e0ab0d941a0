#pragma once

#include "hinges/relation.hpp"

namespace hinges {

// Operator between exterior powers, matrix in the lexicographic wedge bases:
// row index runs over k_out-subsets of {0..n_out-1}, column index over
// k_in-subsets of {0..n_in-1}.
struct ExteriorOperator {
  std::size_t n_in = 0, n_out = 0;
  std::size_t k_in = 0, k_out = 0;
  RationalMatrix mat;

  bool operator==(const ExteriorOperator& o) const {
    return n_in == o.n_in && n_out == o.n_out && k_in == o.k_in && k_out == o.k_out &&
           mat == o.mat;
  }
};

// Degree-k compound of a (a maps V -> W, shape n_out x n_in): the matrix of
// all k x k minors, entry (J, I) = det a[J, I]. Functorial in a.
ExteriorOperator lambda_cha(const RationalMatrix& a, std::size_t k);

// The full family of degree blocks of the fundamental operator of a
// relation, indexed by input degree 0..dim_v. The output degree of block k
// is k + dim S - dim V; blocks outside [0, dim_w] or outside the support of
// the adapted-basis formula are zero. The overall scalar is the one fixed by
// the deterministic canonical_form.
struct LambdaFamily {
  std::size_t dim_v = 0, dim_w = 0;
  long shift = 0;  // dim S - dim V
  std::vector<ExteriorOperator> blocks;  // index = input degree
};

LambdaFamily lambda_relation(const LinearRelation& s);

// Degree-m block for square relations with dim = dim V (output degree m).
ExteriorOperator lambda_m(const LinearRelation& p, std::size_t m);

// a = c * b for a single scalar c; nullopt when not proportional. Both zero
// matrices are proportional with c = 1.
std::optional<Rational> proportionality(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace hinges
