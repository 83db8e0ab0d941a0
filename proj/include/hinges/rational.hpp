#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hinges {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 once
// canonicalized; every constructor below returns a canonical value.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q"; rejects q=0 and malformed input.
Rational parse_rational(const std::string& s);

// "p/q", with "/q" omitted when q == 1.
std::string rational_str(const Rational& r);

// base^e with integer e (negative allowed, base != 0 then).
Rational rat_pow(const Rational& base, long e);

// Principal nonnegative d-th root of x >= 0, when it is rational.
std::optional<Rational> rational_nth_root(const Rational& x, unsigned long d);

}  // namespace hinges
