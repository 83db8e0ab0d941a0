#include "hinges/urchin.hpp"

#include <numeric>

namespace hinges {

UrchinPoint make_spike(std::vector<long> m, Hinge hinge) {
  if (m.size() != hinge.n()) throw std::invalid_argument("exponent vector length != n");
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (m[i] < m[i + 1]) throw std::invalid_argument("exponents must be non-increasing");
  long g = 0;
  for (long v : m) g = std::gcd(g, v);
  if (g != 1) throw std::invalid_argument("exponent vector must be primitive");
  // Multiplicities of the distinct values must match the hinge label.
  OrbitLabel alpha;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == 0 || m[i] != m[i - 1])
      alpha.push_back(1);
    else
      ++alpha.back();
  }
  if (orbit_label(hinge) != alpha)
    throw std::invalid_argument("hinge orbit label does not match the exponent vector");
  return SpikePoint{std::move(m), std::move(hinge)};
}

UrchinPoint curve_limit(const LaurentMatrix& g) {
  ExponentData e = exponents(g);
  bool all_zero = true;
  for (long v : e.m)
    if (v != 0) all_zero = false;
  if (all_zero) {
    RationalMatrix g0 = g.coeff_matrix(0);
    if (g0.det() == 0)
      throw std::logic_error("zero exponents with a singular value at 0");
    return InteriorPoint{std::move(g0)};
  }
  long u = 0;
  for (long v : e.m) u = std::gcd(u, v);
  std::vector<long> m;
  for (long v : e.m) m.push_back(v / u);
  return make_spike(std::move(m), limit_hinge(g).hinge);
}

bool spike_equal(const UrchinPoint& pp, const UrchinPoint& qq) {
  const auto* p = std::get_if<SpikePoint>(&pp);
  const auto* q = std::get_if<SpikePoint>(&qq);
  if (!p || !q) throw std::invalid_argument("spike_equal needs two spikes");
  if (p->m != q->m) throw std::invalid_argument("spikes lie on different exponent vectors");
  if (orbit_label(p->hinge) != orbit_label(q->hinge)) return false;
  std::vector<long> k;
  for (std::size_t i = 0; i < p->m.size(); ++i)
    if (i == 0 || p->m[i] != p->m[i - 1]) k.push_back(p->m[i]);

  std::vector<Rational> s(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) {
    auto sj = relation_scale_factor(p->hinge.terms()[j], q->hinge.terms()[j]);
    if (!sj) return false;
    s[j] = *sj;
    if (k[j] == 0 && s[j] != 1) return false;
  }

  // Solve c^(k_j) = s_j over the nonzero k_j via the gcd combination.
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < k.size(); ++j)
    if (k[j] != 0) nz.push_back(j);
  if (nz.empty()) return true;  // only the k = 0 constraints, already checked

  long d = 0;
  std::vector<long> t(nz.size(), 0);
  for (std::size_t idx = 0; idx < nz.size(); ++idx) {
    long kj = k[nz[idx]];
    if (idx == 0) {
      d = std::abs(kj);
      t[0] = kj > 0 ? 1 : -1;
      continue;
    }
    // Extended gcd of the running d with |kj|.
    long a = d, b = std::abs(kj);
    long x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
      long quot = a / b;
      long r = a - quot * b;
      a = b;
      b = r;
      long xt = x0 - quot * x1;
      x0 = x1;
      x1 = xt;
      long yt = y0 - quot * y1;
      y0 = y1;
      y1 = yt;
    }
    for (std::size_t u2 = 0; u2 < idx; ++u2) t[u2] *= x0;
    t[idx] = (kj > 0 ? y0 : -y0);
    d = a;
  }

  Rational e(1);
  for (std::size_t idx = 0; idx < nz.size(); ++idx)
    e *= rat_pow(s[nz[idx]], t[idx]);

  std::vector<Rational> candidates;
  unsigned long du = static_cast<unsigned long>(d);
  if (d % 2 == 1) {
    auto r = rational_nth_root(e < 0 ? Rational(-e) : e, du);
    if (r) candidates.push_back(e < 0 ? Rational(-*r) : *r);
  } else {
    if (e > 0) {
      auto r = rational_nth_root(e, du);
      if (r) {
        candidates.push_back(*r);
        candidates.push_back(-*r);
      }
    }
  }
  for (const auto& c : candidates) {
    if (c == 0) continue;
    bool ok = true;
    for (std::size_t idx = 0; idx < nz.size() && ok; ++idx)
      if (rat_pow(c, k[nz[idx]]) != s[nz[idx]]) ok = false;
    if (ok) return true;
  }
  return false;
}

UrchinProjection project(const UrchinPoint& p, const ZetaSpace& zeta) {
  UrchinProjection out;
  for (const auto& sp : zeta.spaces) out.signatures.push_back(sp.nu);
  if (const auto* in = std::get_if<InteriorPoint>(&p)) {
    out.weights.assign(zeta.spaces.size(), 0);
    out.vmax = 0;
    for (const auto& sp : zeta.spaces) {
      out.blocks.push_back(rho_group(sp, in->g));
      out.zeroed.push_back(false);
    }
    return out;
  }
  const auto& spike = std::get<SpikePoint>(p);
  for (const auto& sp : zeta.spaces) {
    long v = 0;
    for (std::size_t i = 0; i < sp.n; ++i) v += spike.m[i] * sp.nu[i];
    out.weights.push_back(v);
  }
  out.vmax = *std::max_element(out.weights.begin(), out.weights.end());
  GluedFamily glued = glue(spike.hinge);
  for (std::size_t l = 0; l < zeta.spaces.size(); ++l) {
    if (out.weights[l] == out.vmax) {
      out.blocks.push_back(rho_semigroup(zeta.spaces[l], glued));
      out.zeroed.push_back(false);
    } else {
      out.blocks.push_back(RepOperator{
          zeta.spaces[l].nu,
          RationalMatrix(zeta.spaces[l].dim(), zeta.spaces[l].dim())});
      out.zeroed.push_back(true);
    }
  }
  return out;
}

UrchinProjection zeta_curve_limit(const ZetaSpace& zeta, const LaurentMatrix& g) {
  ExponentData e = exponents(g);
  UrchinProjection out;
  for (const auto& sp : zeta.spaces) {
    out.signatures.push_back(sp.nu);
    long v = 0;
    for (std::size_t i = 0; i < sp.n; ++i) v += e.m[i] * sp.nu[i];
    out.weights.push_back(v);
  }
  out.vmax = *std::max_element(out.weights.begin(), out.weights.end());
  for (std::size_t l = 0; l < zeta.spaces.size(); ++l) {
    if (out.weights[l] == out.vmax) {
      out.blocks.push_back(rep_limit(zeta.spaces[l], g));
      out.zeroed.push_back(false);
    } else {
      out.blocks.push_back(RepOperator{
          zeta.spaces[l].nu,
          RationalMatrix(zeta.spaces[l].dim(), zeta.spaces[l].dim())});
      out.zeroed.push_back(true);
    }
  }
  return out;
}

bool projection_equivalent(const UrchinProjection& a, const UrchinProjection& b) {
  if (a.signatures != b.signatures) return false;
  // One row holding every block entry, then a single proportionality test.
  std::size_t total = 0;
  for (const auto& blk : a.blocks) total += blk.mat.rows() * blk.mat.cols();
  RationalMatrix fa(1, total), fb(1, total);
  std::size_t t = 0;
  for (std::size_t l = 0; l < a.blocks.size(); ++l) {
    if (a.blocks[l].mat.rows() != b.blocks[l].mat.rows()) return false;
    for (std::size_t i = 0; i < a.blocks[l].mat.rows(); ++i)
      for (std::size_t j = 0; j < a.blocks[l].mat.cols(); ++j) {
        fa(0, t) = a.blocks[l].mat(i, j);
        fb(0, t) = b.blocks[l].mat(i, j);
        ++t;
      }
  }
  auto c = proportionality(fa, fb);
  return c.has_value() && *c != 0;
}

bool separate(const LaurentMatrix& g1, const LaurentMatrix& g2,
              const std::vector<CompactificationSpec>& specs) {
  UrchinPoint p1 = curve_limit(g1), p2 = curve_limit(g2);
  for (const auto& spec : specs) {
    ZetaSpace z = build_zeta(spec, g1.n);
    if (!projection_equivalent(project(p1, z), project(p2, z))) return true;
  }
  return false;
}

}  // namespace hinges
