#pragma once

#include "hinges/merofam.hpp"

namespace hinges {

// Non-increasing, nonnegative, one entry per dimension.
using Signature = std::vector<long>;

void validate_signature(const Signature& nu, std::size_t n);

// An irreducible polynomial representation realized as the cyclic span of
// the highest vector inside a tensor product of exterior powers. The basis
// rows are the unique RREF basis of that span in the ambient tensor
// coordinates.
struct RepSpace {
  std::size_t n = 0;
  Signature nu;
  std::vector<std::size_t> factor_degrees;  // degree j repeated nu_j - nu_{j+1} times
  std::vector<std::size_t> factor_dims;
  std::size_t ambient_dim = 1;
  std::size_t xi_index = 0;  // ambient index of the highest vector
  RationalMatrix basis;      // dim() x ambient_dim

  std::size_t dim() const { return basis.rows(); }
};

// Iterates the first-order generator action until the span stabilizes.
// Throws std::length_error when the ambient dimension exceeds the cap.
RepSpace build_rep(const Signature& nu, std::size_t n, std::size_t ambient_cap = 20000);

struct RepOperator {
  Signature nu;
  RationalMatrix mat;  // square, in the RepSpace basis
};

RepOperator rho_group(const RepSpace& rep, const RationalMatrix& g);
RepOperator rho_semigroup(const RepSpace& rep, const GluedFamily& a);

// Limit of the rescaled representation family; coincides with
// rho_semigroup of the glued limit of g.
RepOperator rep_limit(const RepSpace& rep, const LaurentMatrix& g);

struct CompactificationSpec {
  std::vector<Signature> signatures;
};

struct ZetaSpace {
  std::vector<RepSpace> spaces;
};

ZetaSpace build_zeta(const CompactificationSpec& spec, std::size_t n);
std::vector<RepOperator> zeta_group(const ZetaSpace& z, const RationalMatrix& g);
std::vector<RepOperator> zeta_semigroup(const ZetaSpace& z, const GluedFamily& a);

}  // namespace hinges
