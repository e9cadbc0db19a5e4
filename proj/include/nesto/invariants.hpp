#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nesto/families.hpp"
#include "nesto/gamma.hpp"
#include "nesto/ring.hpp"

namespace nesto {

// f_i = number of i-dimensional faces = coefficient of a^i t^(n-i).
std::vector<Integer> fvector(RingCalculator& calc, const BuildingSet& b);
std::vector<Integer> fvector_of(const Poly2& fpoly, int dim);

Poly2 hpoly(RingCalculator& calc, const BuildingSet& b);
GammaVector gamma(RingCalculator& calc, const BuildingSet& b);
bool dehn_sommerville(RingCalculator& calc, const BuildingSet& b);

// Euler-Poincare with the polytope itself counted (f_n = 1):
// sum of (-1)^i f_i == 1.
bool euler_relation(const std::vector<Integer>& f);

struct GalPolyResult {
  GammaVector gamma;
  std::optional<std::size_t> first_negative;  // index into gamma.gammas

  bool passed() const { return !first_negative.has_value(); }
};

// Requires p symmetric and homogeneous of degree n.
GalPolyResult gal_check_poly(const Poly2& p, int n);

struct GalViolation {
  int k = 0;
  int l = 0;
  // "outside-family", "missing", "symmetry", "homogeneity", "grading",
  // "gamma-nonnegativity"
  std::string condition;
  std::string witness;
};

struct GalReport {
  int checked = 0;
  std::vector<GalViolation> violations;  // ordered by (k + l, k)

  bool passed() const { return violations.empty(); }
};

// Checks an h-series of the given family coefficient by coefficient: every
// in-family index must carry a symmetric polynomial of degree dim(k, l)
// with nonnegative gamma-vector, every monomial must have the family's
// grading, and indices outside the family must be zero.
GalReport gal_check_series(const Series2& s, FamilyId id);

}  // namespace nesto
