#pragma once

#include <vector>

#include "nesto/poly2.hpp"

namespace nesto {

// Coordinates of a symmetric homogeneous degree-n polynomial h in the basis
// (alpha t)^i (alpha + t)^(n - 2i), i = 0..floor(n/2).
struct GammaVector {
  int n = 0;
  std::vector<Rational> gammas;

  friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

// Iteratively peels gamma_i off the residual. Throws PreconditionError on
// zero, asymmetric or inhomogeneous input and InternalError if a residual
// survives (impossible for valid input).
GammaVector gamma_extract(const Poly2& h);

// Same, with the degree supplied; accepts the zero polynomial (all-zero
// gamma vector) so that callers who know the dimension need not special-case
// it.
GammaVector gamma_extract(const Poly2& h, int n);

Poly2 gamma_expand(const GammaVector& g);

}  // namespace nesto
