#pragma once

#include "hinges/matrix.hpp"

namespace hinges {

// A linear subspace stored by its unique RREF basis (rows, no zero rows).
// Equality of subspaces is entry-wise equality of the canonical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  // Canonicalizes an arbitrary spanning set.
  Subspace(std::size_t ambient_dim, const RationalMatrix& span_rows);

  static Subspace full(std::size_t ambient_dim);
  static Subspace span_of(const std::vector<std::vector<Rational>>& vectors,
                          std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  // Normal form of v modulo this subspace: pivot coordinates eliminated.
  std::vector<Rational> reduce(const std::vector<Rational>& v) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // All dim() x dim() minors of the basis in lexicographic column-set order,
  // scaled so the first nonzero coordinate is 1.
  std::vector<Rational> pluecker() const;

 private:
  std::size_t ambient_;
  RationalMatrix basis_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// m as a linear map; returns {v : m v = 0} canonically.
Subspace kernel(const RationalMatrix& m);
// Row span / column span as subspaces.
Subspace row_space(const RationalMatrix& m);
Subspace col_space(const RationalMatrix& m);

// Rows of `candidates` that extend `base` to a larger independent set,
// greedily in row order. Returns the selected rows.
std::vector<std::vector<Rational>> extend_basis(const RationalMatrix& base,
                                                const RationalMatrix& candidates);

// Sorted k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);
std::size_t comb_rank(std::size_t n, const std::vector<std::size_t>& set);
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace hinges
