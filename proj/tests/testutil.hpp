#pragma once

#include <random>

#include "hinges/hinge.hpp"
#include "hinges/laurent.hpp"

namespace hingetest {

using namespace hinges;

struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::mt19937_64 eng;

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng);
  }
  Rational rational(long range = 3) {
    long num = uniform(-range, range);
    long den = uniform(1, range);
    return make_rational(num, den);
  }
  Rational nonzero_rational(long range = 3) {
    Rational r = rational(range);
    while (r == 0) r = rational(range);
    return r;
  }
};

inline RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                    long range = 3) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform(-range, range));
  return m;
}

inline RationalMatrix random_invertible(Rng& rng, std::size_t n, long range = 3) {
  while (true) {
    RationalMatrix m = random_matrix(rng, n, n, range);
    if (m.det() != 0) return m;
  }
}

inline Subspace random_subspace(Rng& rng, std::size_t ambient, std::size_t dim) {
  while (true) {
    RationalMatrix m = random_matrix(rng, dim, ambient, 2);
    Subspace s(ambient, m);
    if (s.dim() == dim) return s;
  }
}

inline LinearRelation random_relation(Rng& rng, std::size_t dv, std::size_t dw,
                                      std::size_t dim) {
  return LinearRelation(dv, dw, random_subspace(rng, dv + dw, dim));
}

inline LinearRelation random_gamma_element(Rng& rng, std::size_t n) {
  return random_relation(rng, n, n, n);
}

// Element of the square-relation semigroup with prescribed rank and
// kernel/indefiniteness dimensions, conjugated by random invertibles so the
// attribute subspaces are generic.
inline LinearRelation random_gamma_with_rank(Rng& rng, std::size_t n, std::size_t rank,
                                             long forced_ker_dim = -1) {
  std::size_t ker_dim =
      forced_ker_dim >= 0
          ? static_cast<std::size_t>(forced_ker_dim)
          : (rank == n ? 0 : static_cast<std::size_t>(rng.uniform(0, n - rank)));
  std::size_t indef_dim = n - rank - ker_dim;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Rational> v(2 * n, Rational(0));
    v[i] = 1;
    v[n + i] = 1;
    rows.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < ker_dim; ++i) {
    std::vector<Rational> v(2 * n, Rational(0));
    v[rank + i] = 1;
    rows.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < indef_dim; ++i) {
    std::vector<Rational> v(2 * n, Rational(0));
    v[n + rank + ker_dim + i] = 1;
    rows.push_back(std::move(v));
  }
  LinearRelation base = LinearRelation::from_span(n, n, rows);
  GaMorphism r = compose(
      GaMorphism::of(graph(random_invertible(rng, n, 2))),
      compose(GaMorphism::of(base), GaMorphism::of(graph(random_invertible(rng, n, 2)))));
  return *r.rel;
}

// Mixes generic full-dimension subspaces with low-rank structured ones so
// that degenerate products actually occur.
inline LinearRelation random_gamma_mixed(Rng& rng, std::size_t n) {
  if (rng.uniform(0, 1) == 0) return random_gamma_element(rng, n);
  return random_gamma_with_rank(rng, n, static_cast<std::size_t>(rng.uniform(0, n)));
}

// A pair whose product is likely null: large indefiniteness meeting a large
// kernel in the middle space.
inline std::pair<LinearRelation, LinearRelation> random_gamma_clashing_pair(
    Rng& rng, std::size_t n) {
  std::size_t rp = static_cast<std::size_t>(rng.uniform(0, n - 1));
  std::size_t rq = static_cast<std::size_t>(rng.uniform(0, n - 1 - rp));
  LinearRelation p = random_gamma_with_rank(rng, n, rp, 0);
  LinearRelation q = random_gamma_with_rank(rng, n, rq, n - rq);
  return {p, q};
}

inline OrbitLabel random_composition(Rng& rng, std::size_t n) {
  OrbitLabel alpha;
  std::size_t rest = n;
  while (rest > 0) {
    std::size_t part = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(rest)));
    alpha.push_back(part);
    rest -= part;
  }
  return alpha;
}

inline Hinge random_hinge(Rng& rng, const OrbitLabel& alpha) {
  std::size_t n = 0;
  for (auto a : alpha) n += a;
  return act(random_invertible(rng, n, 2), canonical_hinge(alpha),
             random_invertible(rng, n, 2));
}

inline Hinge random_hinge(Rng& rng, std::size_t n) {
  return random_hinge(rng, random_composition(rng, n));
}

inline LaurentPoly random_laurent_poly(Rng& rng, long lo, long hi, long range = 2) {
  LaurentPoly p;
  for (long e = lo; e <= hi; ++e)
    if (rng.uniform(0, 2) == 0) p.set_coeff(e, Rational(rng.uniform(-range, range)));
  return p;
}

inline LaurentMatrix random_laurent_matrix(Rng& rng, std::size_t n, long lo, long hi) {
  while (true) {
    LaurentMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = random_laurent_poly(rng, lo, hi);
    if (!g.det().is_zero()) return g;
  }
}

inline LaurentMatrix diagonal_power_matrix(const std::vector<long>& pole_orders) {
  LaurentMatrix g(pole_orders.size());
  for (std::size_t i = 0; i < pole_orders.size(); ++i)
    g(i, i) = LaurentPoly::monomial(-pole_orders[i], Rational(1));
  return g;
}

}  // namespace hingetest
