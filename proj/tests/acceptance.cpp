// Acceptance suite: one line per criterion, exact checks throughout.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>

#include "hinges/urchin.hpp"
#include "testutil.hpp"

using namespace hinges;
using hingetest::Rng;

namespace {

int failures = 0;

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<void()> body;
};

struct CheckFail : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFail(what);
}

void run_criterion(const Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  std::string verdict = "PASS";
  std::string detail;
  try {
    c.body();
  } catch (const std::exception& e) {
    verdict = "FAIL";
    detail = e.what();
    ++failures;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (verdict == "PASS" && secs > c.budget_s) {
    verdict = "FAIL";
    detail = "exceeded time budget";
    ++failures;
  }
  std::cout << "[" << verdict << "] criterion " << c.id << ": " << c.name << " ("
            << std::fixed << std::setprecision(2) << secs << " s, budget "
            << std::setprecision(0) << c.budget_s << " s)";
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n"
            << std::flush;
}

// ---- criterion bodies -----------------------------------------------------

void criterion1_category_laws() {
  Rng rng(1001);
  int nonnull = 0;
  for (int t = 0; t < 500; ++t) {
    std::size_t dv = rng.uniform(1, 4), dw = rng.uniform(1, 4);
    std::size_t dy = rng.uniform(1, 4), dz = rng.uniform(1, 4);
    GaMorphism p = GaMorphism::of(hingetest::random_relation(rng, dv, dw, rng.uniform(0, dv + dw)));
    GaMorphism q = GaMorphism::of(hingetest::random_relation(rng, dw, dy, rng.uniform(0, dw + dy)));
    GaMorphism r = GaMorphism::of(hingetest::random_relation(rng, dy, dz, rng.uniform(0, dy + dz)));
    GaMorphism qp = compose(q, p);
    if (!qp.is_null()) {
      ++nonnull;
      require(qp.rel->dim() == q.rel->dim() + p.rel->dim() - dw, "dimension formula");
    }
    GaMorphism left = compose(compose(r, q), p);
    GaMorphism right = compose(r, compose(q, p));
    require(left.is_null() == right.is_null(), "associativity with null");
    if (!left.is_null()) require(*left.rel == *right.rel, "associativity");
    RationalMatrix a = hingetest::random_matrix(rng, dw, dv);
    RationalMatrix b = hingetest::random_matrix(rng, dy, dw);
    GaMorphism gba = compose(GaMorphism::of(graph(b)), GaMorphism::of(graph(a)));
    require(!gba.is_null() && *gba.rel == graph(b * a), "graph homomorphism");
  }
  require(nonnull >= 100, "too few non-null products sampled");
}

void criterion2_fundamental_products() {
  Rng rng(1002);
  int nulls = 0, nonnulls = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = rng.uniform(1, 4);
    LinearRelation p = hingetest::random_gamma_mixed(rng, n);
    LinearRelation q = hingetest::random_gamma_mixed(rng, n);
    if (t % 3 == 0) {
      auto pair = hingetest::random_gamma_clashing_pair(rng, n);
      p = pair.first;
      q = pair.second;
    }
    LambdaFamily fp = lambda_relation(p), fq = lambda_relation(q);
    GaMorphism qp = compose(GaMorphism::of(q), GaMorphism::of(p));
    if (qp.is_null()) {
      ++nulls;
      for (std::size_t m = 0; m <= n; ++m)
        require((fq.blocks[m].mat * fp.blocks[m].mat).is_zero(),
                "null product must kill every degree");
      continue;
    }
    ++nonnulls;
    LambdaFamily fqp = lambda_relation(*qp.rel);
    std::optional<Rational> c;
    for (std::size_t m = 0; m <= n; ++m) {
      RationalMatrix prod = fq.blocks[m].mat * fp.blocks[m].mat;
      auto cm = proportionality(prod, fqp.blocks[m].mat);
      require(cm.has_value(), "degree blocks not proportional");
      if (!fqp.blocks[m].mat.is_zero()) {
        if (!c) c = *cm;
        require(*c == *cm, "scalar differs across degrees");
      }
    }
    require(c.has_value() && *c != 0, "scalar must be nonzero for non-null products");
  }
  require(nulls >= 20 && nonnulls >= 20, "sampling must hit both branches");
}

void criterion3_hinge_alternative() {
  Rng rng(1003);
  std::vector<OrbitLabel> labels;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& a : compositions(n)) labels.push_back(a);
  for (int t = 0; t < 200; ++t) {
    const OrbitLabel& alpha = labels[t % labels.size()];
    Hinge h = hingetest::random_hinge(rng, alpha);
    std::size_t n = h.n();
    for (std::size_t m = 0; m <= n; ++m) {
      std::vector<std::size_t> nz;
      std::vector<RationalMatrix> ops;
      for (std::size_t j = 0; j < h.size(); ++j) {
        ops.push_back(lambda_m(h.terms()[j], m).mat);
        if (!ops.back().is_zero()) nz.push_back(j);
      }
      if (nz.size() == 1) continue;
      require(nz.size() == 2 && nz[1] == nz[0] + 1, "alternative shape");
      require(ops[nz[0]].rank() == 1 && ops[nz[1]].rank() == 1, "rank one at overlaps");
      auto c = proportionality(ops[nz[0]], ops[nz[1]]);
      require(c.has_value() && *c != 0, "overlap blocks proportional");
    }
  }
}

void criterion4_weak_products() {
  Rng rng(1004);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = rng.uniform(1, 3);
    Hinge h1 = hingetest::random_hinge(rng, n);
    Hinge h2 = hingetest::random_hinge(rng, n);
    GluedFamily f1 = glue(h1), f2 = glue(h2);
    GluedFamily prod = glued_product(f1, f2);  // weak product validates inside
    require(well_glued(prod), "gluing must survive products");
    for (std::size_t m = 0; m <= n; ++m) {
      RationalMatrix lam;
      bool found = false;
      for (const auto& term : prod.under.terms) {
        RationalMatrix cand = lambda_m(term, m).mat;
        if (!cand.is_zero()) {
          lam = cand;
          found = true;
          break;
        }
      }
      if (!found) {
        require(prod.blocks[m].is_zero(), "gap degrees must vanish");
        continue;
      }
      auto c = proportionality(prod.blocks[m], lam);
      require(c.has_value() && *c != 0, "degreewise homomorphism up to scalar");
    }
  }
}

void criterion5_factorization_oracle() {
  Rng rng(1005);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = rng.uniform(1, 4);
    LaurentMatrix g = hingetest::random_laurent_matrix(rng, n, -3, 3);
    ExponentData e = exponents(g);
    Factorization f = factorize(g);  // reassembly is checked internally
    require(f.m == e.m, "minor orders vs elimination exponents");
    Factorization f5 = factorize(g, f.precision + 5);
    require(f5.m == f.m, "exponents stable under precision bump");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        require(f5.a(i, j).truncated(f.exact_below) == f.a(i, j).truncated(f.exact_below),
                "a-jet stable under precision bump");
        require(f5.b(i, j).truncated(f.exact_below) == f.b(i, j).truncated(f.exact_below),
                "b-jet stable under precision bump");
      }
  }
}

void criterion6_limit_two_paths() {
  Rng rng(1006);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = rng.uniform(1, 3);
    LaurentMatrix g = hingetest::random_laurent_matrix(rng, n, -2, 2);
    LimitHinge lh = limit_hinge(g);
    Factorization f = factorize(g);
    Hinge framed = act(f.a.coeff_matrix(0), canonical_hinge(lh.exp.alpha),
                       f.b.coeff_matrix(0));
    require(lh.hinge == framed, "lattice reduction vs factorization frame");
    GluedFamily direct = limit_glued(g);
    GluedFamily via = glue(lh.hinge);
    for (std::size_t m = 0; m <= n; ++m)
      require(direct.blocks[m] == via.blocks[m], "glued limit two-path equality");
  }
}

void criterion7_representation_limits() {
  Rng rng(1007);
  // Representation spaces cached per dimension and signature.
  std::vector<std::vector<std::pair<Signature, RepSpace>>> cache(4);
  for (std::size_t n = 1; n <= 3; ++n) {
    Signature cur(n, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long cap) {
      if (i == n) {
        cache[n].emplace_back(cur, build_rep(cur, n));
        return;
      }
      for (long v = 0; v <= cap; ++v) {
        cur[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 3);
  }
  for (int t = 0; t < 50; ++t) {
    std::size_t n = rng.uniform(1, 3);
    LaurentMatrix g = hingetest::random_laurent_matrix(rng, n, -2, 2);
    GluedFamily glued = glue(limit_hinge(g).hinge);
    for (const auto& [nu, rep] : cache[n]) {
      RepOperator direct = rep_limit(rep, g);
      RepOperator via = rho_semigroup(rep, glued);
      require(direct.mat == via.mat, "representation limit two-path equality");
    }
  }
}

void criterion8_representation_dimensions() {
  // Independent oracle: straight enumeration of semistandard fillings.
  auto ssyt = [](const Signature& nu, std::size_t n) {
    std::vector<std::vector<long>> t(nu.size());
    for (std::size_t r = 0; r < nu.size(); ++r) t[r].assign(nu[r], 0);
    long count = 0;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
      while (r < t.size() && t[r].empty()) ++r;
      if (r == t.size()) {
        ++count;
        return;
      }
      long lo = 1;
      if (c > 0) lo = std::max(lo, t[r][c - 1]);
      if (r > 0 && c < t[r - 1].size()) lo = std::max(lo, t[r - 1][c] + 1);
      for (long v = lo; v <= static_cast<long>(n); ++v) {
        t[r][c] = v;
        if (c + 1 < t[r].size())
          fill(r, c + 1);
        else
          fill(r + 1, 0);
      }
    };
    bool empty = true;
    for (const auto& row : t)
      if (!row.empty()) empty = false;
    if (empty) return 1L;
    std::size_t r0 = 0;
    while (t[r0].empty()) ++r0;
    fill(r0, 0);
    return count;
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    Signature cur(n, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long cap) {
      if (i == n) {
        RepSpace rep = build_rep(cur, n);
        require(rep.dim() == static_cast<std::size_t>(ssyt(cur, n)),
                "dimension differs from the tableaux count");
        return;
      }
      for (long v = 0; v <= cap; ++v) {
        cur[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 4);
  }
}

void criterion9_reparametrization_and_projection() {
  Rng rng(1009);
  std::vector<std::vector<CompactificationSpec>> specs_by_n(4);
  specs_by_n[2] = {CompactificationSpec{{Signature{1, 0}}},
                   CompactificationSpec{{Signature{1, 1}}},
                   CompactificationSpec{{Signature{2, 1}}},
                   CompactificationSpec{{Signature{1, 0}, Signature{1, 1}}},
                   CompactificationSpec{{Signature{2, 0}, Signature{1, 1}}}};
  specs_by_n[3] = {CompactificationSpec{{Signature{1, 0, 0}}},
                   CompactificationSpec{{Signature{1, 1, 1}}},
                   CompactificationSpec{{Signature{2, 1, 0}}},
                   CompactificationSpec{{Signature{1, 0, 0}, Signature{1, 1, 0}}},
                   CompactificationSpec{{Signature{1, 1, 0}, Signature{1, 1, 1}}}};
  std::map<std::pair<std::size_t, std::size_t>, ZetaSpace> zcache;
  auto zeta_for = [&](std::size_t n, std::size_t i) -> ZetaSpace& {
    auto key = std::make_pair(n, i);
    auto it = zcache.find(key);
    if (it == zcache.end()) it = zcache.emplace(key, build_zeta(specs_by_n[n][i], n)).first;
    return it->second;
  };
  auto same_point = [](const UrchinPoint& a, const UrchinPoint& b) {
    if (std::holds_alternative<InteriorPoint>(a) !=
        std::holds_alternative<InteriorPoint>(b))
      return false;
    if (const auto* ia = std::get_if<InteriorPoint>(&a))
      return ia->g == std::get<InteriorPoint>(b).g;
    if (std::get<SpikePoint>(a).m != std::get<SpikePoint>(b).m) return false;
    return spike_equal(a, b);
  };
  for (int t = 0; t < 50; ++t) {
    std::size_t n = t % 2 == 0 ? 2 : 3;
    LaurentMatrix g = hingetest::random_laurent_matrix(rng, n, -2, 2);
    UrchinPoint base = curve_limit(g);
    // Parametrization independence of the boundary point.
    LaurentMatrix gf = reparametrize(g, FormalReparam{{rng.rational(), rng.rational()}, 0});
    LaurentMatrix gp = reparametrize(g, PowerReparam{rng.uniform(2, 3)});
    LaurentMatrix gc = reparametrize(g, ScalarReparam{rng.nonzero_rational()});
    require(same_point(base, curve_limit(gf)), "formal reparametrization moved the point");
    require(same_point(base, curve_limit(gp)), "power reparametrization moved the point");
    require(same_point(base, curve_limit(gc)), "scalar reparametrization moved the point");
    for (std::size_t i = 0; i < specs_by_n[n].size(); ++i) {
      ZetaSpace& z = zeta_for(n, i);
      UrchinProjection via = project(base, z);
      UrchinProjection direct = zeta_curve_limit(z, g);
      require(via.zeroed == direct.zeroed, "zero pattern differs");
      require(projection_equivalent(via, direct), "projection square does not commute");
    }
  }
}

void criterion10_orbit_arithmetic() {
  std::size_t expect = 1;
  for (std::size_t n = 1; n <= 10; ++n) {
    require(compositions(n).size() == expect, "composition count");
    expect *= 2;
  }
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& alpha : compositions(n)) {
      std::size_t tau = alpha.size();
      require((n * n - tau) + tau - 1 == n * n - 1, "spike dimension identity");
    }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "category laws on 500 random relation triples", 10, criterion1_category_laws},
      {2, "fundamental-operator products on 200 square-relation pairs", 30,
       criterion2_fundamental_products},
      {3, "degree alternative on 200 hinges over every orbit label", 30,
       criterion3_hinge_alternative},
      {4, "weak-product closure and glued homomorphism on 100 hinge pairs", 60,
       criterion4_weak_products},
      {5, "exponent cross-oracle and jet stability on 200 families", 60,
       criterion5_factorization_oracle},
      {6, "two-path boundary limits on 100 families", 60, criterion6_limit_two_paths},
      {7, "two-path representation limits on 50 families, all small signatures", 120,
       criterion7_representation_limits},
      {8, "representation dimensions against the tableaux oracle", 60,
       criterion8_representation_dimensions},
      {9, "reparametrization invariance and the projection square on 50 curves", 60,
       criterion9_reparametrization_and_projection},
      {10, "orbit label arithmetic", 1, criterion10_orbit_arithmetic},
  };
  for (const auto& c : criteria) run_criterion(c);
  if (failures == 0)
    std::cout << "acceptance: all criteria passed\n";
  else
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return failures;
}
