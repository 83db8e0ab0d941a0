#pragma once

#include "hinges/reps.hpp"

namespace hinges {

struct InteriorPoint {
  RationalMatrix g;  // invertible
};

// Primitive non-increasing exponent vector plus a hinge of the matching
// orbit label, taken modulo the scalar rescaling of the terms.
struct SpikePoint {
  std::vector<long> m;
  Hinge hinge;
};

using UrchinPoint = std::variant<InteriorPoint, SpikePoint>;

// Validates primitivity of m and the orbit-label match.
UrchinPoint make_spike(std::vector<long> m, Hinge hinge);

// Boundary value of the family: the group element when the family is
// holomorphic and invertible at 0, otherwise the spike with the exponent
// vector divided by its gcd.
UrchinPoint curve_limit(const LaurentMatrix& g);

// Whether two spikes with the same exponent vector agree modulo the scalar
// equivalence: some c != 0 scales term j by c^(k_j). Over the rationals the
// existence of c reduces to a root-extraction check.
bool spike_equal(const UrchinPoint& p, const UrchinPoint& q);

struct UrchinProjection {
  std::vector<Signature> signatures;
  std::vector<long> weights;       // per-signature pairing of m with nu
  long vmax = 0;
  std::vector<RepOperator> blocks;  // zeroed where the weight is below vmax
  std::vector<bool> zeroed;
};

// Image of an urchin point in the compactification attached to zeta.
UrchinProjection project(const UrchinPoint& p, const ZetaSpace& zeta);

// Limit of the composed family zeta(g(z)) computed directly from the
// rescaled representation limits. Matches project(curve_limit(g)) up to one
// global scalar.
UrchinProjection zeta_curve_limit(const ZetaSpace& zeta, const LaurentMatrix& g);

// Proportionality of two projections with a single scalar across all blocks.
bool projection_equivalent(const UrchinProjection& a, const UrchinProjection& b);

// Whether any listed compactification distinguishes the two curve limits.
bool separate(const LaurentMatrix& g1, const LaurentMatrix& g2,
              const std::vector<CompactificationSpec>& specs);

}  // namespace hinges
