#pragma once

#include <limits>
#include <map>

#include "hinges/matrix.hpp"

namespace hinges {

// Finite-support Laurent polynomial over the rationals. No zero
// coefficients are stored; the zero polynomial has empty support.
class LaurentPoly {
 public:
  static constexpr long kOrdInfinity = std::numeric_limits<long>::max();

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c) {
    if (c != 0) c_[0] = c;
  }
  static LaurentPoly monomial(long exp, const Rational& c);

  bool is_zero() const { return c_.empty(); }
  // Minimal exponent with nonzero coefficient; kOrdInfinity for zero.
  long ord() const { return c_.empty() ? kOrdInfinity : c_.begin()->first; }
  long max_exp() const { return c_.empty() ? -kOrdInfinity : c_.rbegin()->first; }
  Rational coeff(long exp) const;
  const std::map<long, Rational>& coeffs() const { return c_; }

  void set_coeff(long exp, const Rational& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rational& c) const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly shifted(long k) const;          // times z^k
  LaurentPoly truncated(long below) const;    // keep exponents < below

  // Multiplicative inverse as a truncated expansion: exact coefficients for
  // all exponents < below. Requires a nonzero input.
  LaurentPoly inverse_truncated(long below) const;

  std::string str() const;  // e.g. "3/2*z^-1 + 1 - z^2"

 private:
  std::map<long, Rational> c_;
};

struct LaurentMatrix {
  std::size_t n = 0;
  std::vector<LaurentPoly> entries;  // row major, n x n

  LaurentMatrix() = default;
  explicit LaurentMatrix(std::size_t n_) : n(n_), entries(n_ * n_) {}

  const LaurentPoly& operator()(std::size_t i, std::size_t j) const {
    return entries[i * n + j];
  }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }

  static LaurentMatrix identity(std::size_t n);
  static LaurentMatrix from_constant(const RationalMatrix& m);

  LaurentMatrix operator*(const LaurentMatrix& o) const;
  bool operator==(const LaurentMatrix& o) const {
    return n == o.n && entries == o.entries;
  }

  LaurentPoly det() const;
  RationalMatrix coeff_matrix(long exp) const;  // entrywise coefficient at z^exp
};

// All k x k minors of a Laurent matrix, row set J by column set I in
// lexicographic order. Built incrementally by cofactor expansion.
std::vector<std::vector<LaurentPoly>> laurent_minors(const LaurentMatrix& m, std::size_t k);

}  // namespace hinges
