#include "hinges/reps.hpp"

#include <algorithm>
#include <map>

namespace hinges {

void validate_signature(const Signature& nu, std::size_t n) {
  if (nu.size() != n) throw std::invalid_argument("signature length differs from n");
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < 0) throw std::invalid_argument("signature entries must be nonnegative");
    if (i + 1 < nu.size() && nu[i] < nu[i + 1])
      throw std::invalid_argument("signature must be non-increasing");
  }
}

namespace {

using SparseVec = std::map<std::size_t, Rational>;

struct Tables {
  // Per factor degree: the combination list and a dense dimension.
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> combs;
};

std::vector<std::size_t> decode_index(const RepSpace& rep, std::size_t idx) {
  std::vector<std::size_t> parts(rep.factor_degrees.size());
  for (std::size_t f = rep.factor_degrees.size(); f-- > 0;) {
    parts[f] = idx % rep.factor_dims[f];
    idx /= rep.factor_dims[f];
  }
  return parts;
}

// Derived action of the matrix unit E_{ij} (i != j) on one wedge basis
// element: substitute e_j -> e_i in place, with the sorting sign.
std::optional<std::pair<std::size_t, int>> unit_on_wedge(
    const std::vector<std::size_t>& set, std::size_t n, std::size_t i, std::size_t j) {
  auto jt = std::find(set.begin(), set.end(), j);
  if (jt == set.end()) return std::nullopt;
  if (std::find(set.begin(), set.end(), i) != set.end()) return std::nullopt;
  std::vector<std::size_t> out;
  out.reserve(set.size());
  for (auto v : set)
    if (v != j) out.push_back(v);
  // Count elements strictly between i and j: each transposition flips the sign.
  std::size_t lo = std::min(i, j), hi = std::max(i, j);
  int sign = 1;
  for (auto v : out)
    if (v > lo && v < hi) sign = -sign;
  out.push_back(i);
  std::sort(out.begin(), out.end());
  return std::make_pair(comb_rank(n, out), sign);
}

SparseVec apply_unit(const RepSpace& rep, const Tables& tb, const SparseVec& v,
                     std::size_t i, std::size_t j) {
  SparseVec out;
  for (const auto& [idx, c] : v) {
    auto parts = decode_index(rep, idx);
    // Leibniz rule across the tensor factors.
    for (std::size_t f = 0; f < rep.factor_degrees.size(); ++f) {
      const auto& sets = tb.combs.at(rep.factor_degrees[f]);
      auto hit = unit_on_wedge(sets[parts[f]], rep.n, i, j);
      if (!hit) continue;
      std::size_t stride = 1;
      for (std::size_t g = f + 1; g < rep.factor_dims.size(); ++g)
        stride *= rep.factor_dims[g];
      long diff = static_cast<long>(hit->first) - static_cast<long>(parts[f]);
      std::size_t idx2 =
          static_cast<std::size_t>(static_cast<long>(idx) + diff * static_cast<long>(stride));
      Rational add = c * hit->second;
      auto it = out.find(idx2);
      if (it == out.end()) {
        out[idx2] = add;
      } else {
        it->second += add;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

// Reduce v against rows (each reduced, leading coefficient 1 at its pivot).
void reduce_against(SparseVec& v, const std::map<std::size_t, SparseVec>& rows) {
  for (const auto& [pivot, row] : rows) {
    auto it = v.find(pivot);
    if (it == v.end() || it->second == 0) continue;
    Rational f = it->second;
    for (const auto& [c, x] : row) {
      auto vit = v.find(c);
      if (vit == v.end()) {
        v[c] = -f * x;
      } else {
        vit->second -= f * x;
        if (vit->second == 0) v.erase(vit);
      }
    }
  }
}

}  // namespace

RepSpace build_rep(const Signature& nu, std::size_t n, std::size_t ambient_cap) {
  validate_signature(nu, n);
  RepSpace rep;
  rep.n = n;
  rep.nu = nu;
  for (std::size_t j = 1; j <= n; ++j) {
    long d = nu[j - 1] - (j < n ? nu[j] : 0);
    for (long t = 0; t < d; ++t) rep.factor_degrees.push_back(j);
  }
  rep.ambient_dim = 1;
  for (auto j : rep.factor_degrees) {
    rep.factor_dims.push_back(binomial(n, j));
    rep.ambient_dim *= rep.factor_dims.back();
    if (rep.ambient_dim > ambient_cap)
      throw std::length_error("ambient tensor dimension exceeds the configured cap");
  }
  rep.xi_index = 0;  // e_1^...^e_j is the first combination in lex order

  Tables tb;
  for (auto j : rep.factor_degrees)
    if (!tb.combs.count(j)) tb.combs[j] = combinations(n, j);

  // Weight-graded RREF closure under all off-diagonal matrix units. Supports
  // of different weights are disjoint, so rows are keyed by pivot globally.
  std::map<std::size_t, SparseVec> rows;
  std::vector<SparseVec> work;
  SparseVec xi{{rep.xi_index, Rational(1)}};
  rows[rep.xi_index] = xi;
  work.push_back(xi);
  while (!work.empty()) {
    SparseVec v = std::move(work.back());
    work.pop_back();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        SparseVec w = apply_unit(rep, tb, v, i, j);
        reduce_against(w, rows);
        if (w.empty()) continue;
        std::size_t pivot = w.begin()->first;
        Rational lead = w.begin()->second;
        for (auto& [c, x] : w) x /= lead;
        // Back-substitute into the existing rows to keep full reduction.
        for (auto& [p, row] : rows) {
          auto it = row.find(pivot);
          if (it == row.end()) continue;
          Rational f = it->second;
          for (const auto& [c, x] : w) {
            auto rit = row.find(c);
            if (rit == row.end()) {
              row[c] = -f * x;
            } else {
              rit->second -= f * x;
              if (rit->second == 0) row.erase(rit);
            }
          }
        }
        rows[pivot] = w;
        work.push_back(std::move(w));
      }
  }

  rep.basis = RationalMatrix(rows.size(), rep.ambient_dim);
  std::size_t r = 0;
  for (const auto& [pivot, row] : rows) {
    for (const auto& [c, x] : row) rep.basis(r, c) = x;
    ++r;
  }
  return rep;
}

namespace {

template <class Scalar, class BlockEntry>
std::vector<Scalar> tensor_apply(const RepSpace& rep, BlockEntry&& entry,
                                 const std::vector<std::pair<std::size_t, Scalar>>& v) {
  std::vector<Scalar> out(rep.ambient_dim, Scalar());
  for (const auto& [idx, coeff] : v) {
    auto parts = decode_index(rep, idx);
    std::vector<Scalar> col{coeff};
    for (std::size_t f = 0; f < rep.factor_degrees.size(); ++f) {
      std::vector<Scalar> next(col.size() * rep.factor_dims[f], Scalar());
      for (std::size_t s = 0; s < col.size(); ++s)
        for (std::size_t rr = 0; rr < rep.factor_dims[f]; ++rr)
          next[s * rep.factor_dims[f] + rr] = col[s] * entry(f, rr, parts[f]);
      col = std::move(next);
    }
    for (std::size_t t = 0; t < rep.ambient_dim; ++t) out[t] = out[t] + col[t];
  }
  return out;
}

// Coordinates of an ambient vector in the RREF basis; throws when the
// vector falls outside the span.
std::vector<Rational> restrict_coords(const RepSpace& rep,
                                      const std::vector<Rational>& y) {
  std::vector<std::size_t> pivots(rep.dim());
  for (std::size_t r = 0; r < rep.dim(); ++r) {
    std::size_t p = 0;
    while (rep.basis(r, p) == 0) ++p;
    pivots[r] = p;
  }
  std::vector<Rational> coords(rep.dim());
  for (std::size_t r = 0; r < rep.dim(); ++r) coords[r] = y[pivots[r]];
  std::vector<Rational> check = y;
  for (std::size_t r = 0; r < rep.dim(); ++r) {
    if (coords[r] == 0) continue;
    for (std::size_t c = 0; c < rep.ambient_dim; ++c)
      check[c] -= coords[r] * rep.basis(r, c);
  }
  if (!is_zero_vec(check))
    throw std::logic_error("tensor image escaped the representation subspace");
  return coords;
}

template <class BlockEntry>
RepOperator rho_from_blocks(const RepSpace& rep, BlockEntry&& entry) {
  RepOperator op{rep.nu, RationalMatrix(rep.dim(), rep.dim())};
  for (std::size_t c = 0; c < rep.dim(); ++c) {
    std::vector<std::pair<std::size_t, Rational>> v;
    for (std::size_t t = 0; t < rep.ambient_dim; ++t)
      if (rep.basis(c, t) != 0) v.emplace_back(t, rep.basis(c, t));
    auto y = tensor_apply<Rational>(rep, entry, v);
    auto coords = restrict_coords(rep, y);
    for (std::size_t r = 0; r < rep.dim(); ++r) op.mat(r, c) = coords[r];
  }
  return op;
}

}  // namespace

RepOperator rho_group(const RepSpace& rep, const RationalMatrix& g) {
  if (g.rows() != rep.n || g.cols() != rep.n)
    throw std::invalid_argument("group element has wrong size");
  std::map<std::size_t, RationalMatrix> blocks;
  for (auto j : rep.factor_degrees)
    if (!blocks.count(j)) blocks[j] = lambda_cha(g, j).mat;
  return rho_from_blocks(rep, [&](std::size_t f, std::size_t r, std::size_t c) {
    return blocks.at(rep.factor_degrees[f])(r, c);
  });
}

RepOperator rho_semigroup(const RepSpace& rep, const GluedFamily& a) {
  if (a.n != rep.n) throw std::invalid_argument("glued family has wrong ambient");
  return rho_from_blocks(rep, [&](std::size_t f, std::size_t r, std::size_t c) {
    return a.blocks[rep.factor_degrees[f]](r, c);
  });
}

RepOperator rep_limit(const RepSpace& rep, const LaurentMatrix& g) {
  if (g.n != rep.n) throw std::invalid_argument("family has wrong size");
  ExponentData e = exponents(g);
  long shift = 0;
  for (std::size_t i = 0; i < rep.n; ++i) shift += e.m[i] * rep.nu[i];
  std::map<std::size_t, std::vector<std::vector<LaurentPoly>>> blocks;
  for (auto j : rep.factor_degrees)
    if (!blocks.count(j)) blocks[j] = laurent_minors(g, j);
  RepOperator op{rep.nu, RationalMatrix(rep.dim(), rep.dim())};
  bool nonzero = false;
  for (std::size_t c = 0; c < rep.dim(); ++c) {
    std::vector<std::pair<std::size_t, LaurentPoly>> v;
    for (std::size_t t = 0; t < rep.ambient_dim; ++t)
      if (rep.basis(c, t) != 0)
        v.emplace_back(t, LaurentPoly(rep.basis(c, t)));
    auto y = tensor_apply<LaurentPoly>(
        rep,
        [&](std::size_t f, std::size_t r, std::size_t cc) {
          return blocks.at(rep.factor_degrees[f])[r][cc];
        },
        v);
    std::vector<Rational> y0(rep.ambient_dim);
    for (std::size_t t = 0; t < rep.ambient_dim; ++t) {
      if (!y[t].is_zero() && y[t].ord() < -shift)
        throw std::logic_error("representation family order exceeds the exponent sum");
      y0[t] = y[t].coeff(-shift);
      if (y0[t] != 0) nonzero = true;
    }
    auto coords = restrict_coords(rep, y0);
    for (std::size_t r = 0; r < rep.dim(); ++r) op.mat(r, c) = coords[r];
  }
  if (!nonzero) throw std::logic_error("representation limit vanished");
  return op;
}

ZetaSpace build_zeta(const CompactificationSpec& spec, std::size_t n) {
  if (spec.signatures.empty())
    throw std::invalid_argument("a compactification needs at least one signature");
  ZetaSpace z;
  for (const auto& nu : spec.signatures) z.spaces.push_back(build_rep(nu, n));
  return z;
}

std::vector<RepOperator> zeta_group(const ZetaSpace& z, const RationalMatrix& g) {
  std::vector<RepOperator> out;
  for (const auto& s : z.spaces) out.push_back(rho_group(s, g));
  return out;
}

std::vector<RepOperator> zeta_semigroup(const ZetaSpace& z, const GluedFamily& a) {
  std::vector<RepOperator> out;
  for (const auto& s : z.spaces) out.push_back(rho_semigroup(s, a));
  return out;
}

}  // namespace hinges
