#include <doctest.h>

#include "testutil.hpp"

using namespace hinges;
using hingetest::Rng;

namespace {
std::vector<Rational> rvec(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST_CASE("graph attributes") {
  LinearRelation id2 = graph(RationalMatrix::identity(2));
  CHECK(id2.ker().dim() == 0);
  CHECK(id2.image() == Subspace::full(2));
  CHECK(id2.dom() == Subspace::full(2));
  CHECK(id2.indef().dim() == 0);
  CHECK(id2.rk() == 2);

  LinearRelation z = graph(RationalMatrix(2, 2));
  CHECK(z.ker() == Subspace::full(2));
  CHECK(z.image().dim() == 0);
  CHECK(z.rk() == 0);

  LinearRelation nil = graph(RationalMatrix::from_ints({{0, 1}, {0, 0}}));
  CHECK(nil.ker() == Subspace::span_of({rvec({1, 0})}, 2));
  CHECK(nil.image() == Subspace::span_of({rvec({1, 0})}, 2));
  CHECK(nil.rk() == 1);
  CHECK(nil.dom() == Subspace::full(2));
}

TEST_CASE("full space and rank formula") {
  LinearRelation full = LinearRelation(1, 1, Subspace::full(2));
  CHECK(full.dim() == 2);
  CHECK(!in_gamma(full));
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    std::size_t dv = rng.uniform(1, 4), dw = rng.uniform(1, 4);
    LinearRelation p = hingetest::random_relation(rng, dv, dw, rng.uniform(0, dv + dw));
    CHECK(p.rk() == p.dom().dim() - p.ker().dim());
    CHECK(p.rk() == p.image().dim() - p.indef().dim());
  }
}

TEST_CASE("graph composition is a homomorphism") {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    std::size_t dv = rng.uniform(1, 3), dw = rng.uniform(1, 3), dy = rng.uniform(1, 3);
    RationalMatrix a = hingetest::random_matrix(rng, dw, dv);
    RationalMatrix b = hingetest::random_matrix(rng, dy, dw);
    GaMorphism qp = compose(GaMorphism::of(graph(b)), GaMorphism::of(graph(a)));
    REQUIRE(!qp.is_null());
    CHECK(*qp.rel == graph(b * a));
  }
}

TEST_CASE("null composition cases") {
  // p = V (+) 0 then q = 0 (+) V: image + domain misses W entirely.
  LinearRelation p = LinearRelation::from_span(2, 2, {rvec({1, 0, 0, 0}), rvec({0, 1, 0, 0})});
  LinearRelation q = LinearRelation::from_span(2, 2, {rvec({0, 0, 1, 0}), rvec({0, 0, 0, 1})});
  CHECK(compose(GaMorphism::of(q), GaMorphism::of(p)).is_null());
  CHECK(compose(GaMorphism::of(q), GaMorphism::null(2, 2)).is_null());
  CHECK(compose(GaMorphism::null(2, 2), GaMorphism::of(p)).is_null());
}

TEST_CASE("composition dimension formula and associativity") {
  Rng rng(37);
  int nonnull_seen = 0;
  for (int t = 0; t < 150; ++t) {
    std::size_t dv = rng.uniform(1, 3), dw = rng.uniform(1, 3);
    std::size_t dy = rng.uniform(1, 3), dz = rng.uniform(1, 3);
    GaMorphism p = GaMorphism::of(hingetest::random_relation(rng, dv, dw, rng.uniform(0, dv + dw)));
    GaMorphism q = GaMorphism::of(hingetest::random_relation(rng, dw, dy, rng.uniform(0, dw + dy)));
    GaMorphism r = GaMorphism::of(hingetest::random_relation(rng, dy, dz, rng.uniform(0, dy + dz)));
    GaMorphism qp = compose(q, p);
    if (!qp.is_null()) {
      ++nonnull_seen;
      CHECK(qp.rel->dim() == q.rel->dim() + p.rel->dim() - dw);
    }
    GaMorphism left = compose(compose(r, q), p);
    GaMorphism right = compose(r, compose(q, p));
    CHECK(left.is_null() == right.is_null());
    if (!left.is_null()) CHECK(*left.rel == *right.rel);
  }
  CHECK(nonnull_seen > 10);
}

TEST_CASE("pseudoinverse and scaling") {
  RationalMatrix d = RationalMatrix::from_ints({{2, 0}, {0, 3}});
  RationalMatrix dinv =
      RationalMatrix::from_rows({{make_rational(1, 2), Rational(0)},
                                 {Rational(0), make_rational(1, 3)}});
  CHECK(pseudoinverse(graph(d)) == graph(dinv));

  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    LinearRelation p = hingetest::random_relation(rng, 3, 3, rng.uniform(0, 6));
    CHECK(scale(Rational(1), p) == p);
    LinearRelation pi = pseudoinverse(p);
    CHECK(pi.ker() == p.indef());
    CHECK(pi.indef() == p.ker());
    CHECK(pi.dom() == p.image());
    CHECK(pi.image() == p.dom());
    Rational c = rng.nonzero_rational();
    CHECK(scale(Rational(1) / c, scale(c, p)) == p);
  }
  // A rank-zero relation is a fixed point of scaling.
  LinearRelation v0 = LinearRelation::from_span(2, 2, {rvec({1, 0, 0, 0}), rvec({0, 1, 0, 0})});
  CHECK(scale(Rational(5), v0) == v0);
  CHECK_THROWS_AS(scale(Rational(0), v0), std::invalid_argument);
}

TEST_CASE("gamma membership") {
  CHECK(in_gamma(graph(RationalMatrix::from_ints({{1, 2}, {3, 4}}))));
  CHECK(!in_gamma(LinearRelation(2, 2, Subspace::full(4))));
  CHECK(!in_gamma(LinearRelation::from_span(2, 2, {rvec({1, 0, 0, 0})})));
  LinearRelation g = graph(RationalMatrix::from_ints({{1, 1}, {1, 1}}));
  CHECK(g.dom().dim() + g.indef().dim() == 2);
  CHECK(g.ker().dim() + g.image().dim() == 2);
}

TEST_CASE("rank-one relation from adapted basis data in dimension 3") {
  // One kernel direction, one graph pair, one indefiniteness direction.
  LinearRelation s = LinearRelation::from_span(
      3, 3,
      {{Rational(0), Rational(0), Rational(0), Rational(1), Rational(0), Rational(0)},
       {Rational(0), Rational(1), Rational(0), Rational(0), Rational(1), Rational(0)},
       {Rational(0), Rational(0), Rational(1), Rational(0), Rational(0), Rational(0)}});
  CHECK(s.dim() == 3);
  CHECK(s.rk() == 1);
  RelationCanonicalForm f = canonical_form(s);
  CHECK(f.alpha == 1);
  CHECK(f.beta == 1);
  CHECK(f.gamma == 1);
  CHECK(f.mu == 1);
  CHECK(f.nu == 1);
}

TEST_CASE("canonical form examples and round trip") {
  RelationCanonicalForm f = canonical_form(graph(RationalMatrix::identity(3)));
  CHECK(f.alpha == 0);
  CHECK(f.beta == 3);
  CHECK(f.gamma == 0);
  CHECK(f.mu == 0);
  CHECK(f.nu == 0);
  CHECK(f.basis_v == RationalMatrix::identity(3));
  CHECK(f.basis_w == RationalMatrix::identity(3));

  LinearRelation v0 =
      LinearRelation::from_span(2, 2, {rvec({1, 0, 0, 0}), rvec({0, 1, 0, 0})});
  RelationCanonicalForm f0 = canonical_form(v0);
  CHECK(f0.gamma == 2);
  CHECK(f0.alpha == 0);
  CHECK(f0.beta == 0);
  CHECK(f0.nu == 2);

  Rng rng(43);
  for (int t = 0; t < 60; ++t) {
    std::size_t dv = rng.uniform(1, 4), dw = rng.uniform(1, 4);
    LinearRelation s = hingetest::random_relation(rng, dv, dw, rng.uniform(0, dv + dw));
    RelationCanonicalForm cf = canonical_form(s);
    CHECK(cf.alpha + cf.beta + cf.gamma == dv);
    CHECK(cf.mu + cf.beta + cf.nu == dw);
    CHECK(cf.beta == s.rk());
    CHECK(cf.basis_v.det() != 0);
    CHECK(cf.basis_w.det() != 0);
    CHECK(reconstruct(cf) == s);
    // h rows span the kernel, F rows span the indefiniteness.
    for (std::size_t i = 0; i < cf.gamma; ++i)
      CHECK(s.ker().contains(cf.basis_v.row(cf.alpha + cf.beta + i)));
    for (std::size_t i = 0; i < cf.mu; ++i)
      CHECK(s.indef().contains(cf.basis_w.row(i)));
  }
}
