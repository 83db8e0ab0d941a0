#include "hinges/rational.hpp"

#include <stdexcept>

namespace hinges {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // Strict shape check: optional sign, digits, optional "/digits".
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) throw std::invalid_argument("bad rational literal: " + s);
  if (i != s.size()) {
    if (s[i] != '/') throw std::invalid_argument("bad rational literal: " + s);
    ++i;
    std::size_t den_digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++den_digits;
    if (den_digits == 0 || i != s.size())
      throw std::invalid_argument("bad rational literal: " + s);
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("0 raised to negative power");
    return Rational(0);
  }
  Rational b = e < 0 ? Rational(1) / base : base;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                          : static_cast<unsigned long>(e);
  Rational acc(1);
  while (k) {
    if (k & 1ul) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

namespace {
std::optional<mpz_class> integer_nth_root(const mpz_class& x, unsigned long d) {
  if (sgn(x) < 0) return std::nullopt;
  mpz_class root;
  int exact = mpz_root(root.get_mpz_t(), x.get_mpz_t(), d);
  if (!exact) return std::nullopt;
  return root;
}
}  // namespace

std::optional<Rational> rational_nth_root(const Rational& x, unsigned long d) {
  if (d == 0) throw std::invalid_argument("0th root");
  if (sgn(x) < 0) return std::nullopt;
  auto num = integer_nth_root(x.get_num(), d);
  if (!num) return std::nullopt;
  auto den = integer_nth_root(x.get_den(), d);
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

}  // namespace hinges
