#pragma once

#include <variant>

#include "hinges/hinge.hpp"
#include "hinges/laurent.hpp"

namespace hinges {

// Pole order of a nonzero Laurent polynomial: -ord of the lowest term.
long pole_order(const LaurentPoly& p);
// Pole order of a matrix family: the worst entry.
long pole_order(const LaurentMatrix& g);

struct ExponentData {
  std::vector<long> m;             // non-increasing, one per dimension
  std::vector<long> k;             // distinct values of m, decreasing
  std::vector<std::size_t> alpha;  // multiplicity of each k value
};

// m_j = ord of the j-minor compound minus ord of the (j-1)-minor compound.
// Throws std::domain_error when det = 0.
ExponentData exponents(const LaurentMatrix& g);

struct PrecisionError : std::runtime_error {
  PrecisionError(const std::string& what_, long required_)
      : std::runtime_error(what_), required(required_) {}
  long required;
};

// gamma(z) = a(z) * diag(z^-m) * b(z) with a, b invertible at 0, all jets
// exact below the stated exponent threshold.
struct Factorization {
  LaurentMatrix a, b;
  std::vector<long> m;
  long precision = 0;      // the working precision that produced the jets
  long exact_below = 0;    // coefficients with exponent < this are reliable
};

// Elimination over the power-series local ring on truncated jets. Pass
// precision <= 0 for the default derived from the exponent spread and the
// entry degree span.
Factorization factorize(const LaurentMatrix& g, long precision = 0);

long default_precision(const LaurentMatrix& g);

// Grassmannian limit at z -> 0 of the column span of [I ; z^k g(z)],
// as a relation V => V.
LinearRelation limit_relation(const LaurentMatrix& g, long k);

struct LimitHinge {
  ExponentData exp;
  Hinge hinge;
};

// One limit relation per distinct exponent; the chain always validates.
LimitHinge limit_hinge(const LaurentMatrix& g);

// Degreewise limits of the rescaled minor compounds; exactly the glued
// family of the limit hinge.
GluedFamily limit_glued(const LaurentMatrix& g);

struct FormalReparam {
  std::vector<Rational> higher;  // z + higher[0] z^2 + higher[1] z^3 + ...
  long precision = 0;            // 0: derive from the input
};
struct PowerReparam {
  long p = 1;  // z -> z^p, p >= 1
};
struct ScalarReparam {
  Rational c;  // z -> c z, c != 0
};
using Reparam = std::variant<FormalReparam, PowerReparam, ScalarReparam>;

LaurentMatrix reparametrize(const LaurentMatrix& g, const Reparam& r);

// All n x n Plucker minors of the 2n x n family [I ; z^k g], lexicographic
// over row sets. Oracle for the limit computation.
std::vector<LaurentPoly> graph_pluecker(const LaurentMatrix& g, long k);

}  // namespace hinges
