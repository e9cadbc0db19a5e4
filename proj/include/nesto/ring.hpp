#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "nesto/building_set.hpp"
#include "nesto/poly2.hpp"

namespace nesto {

// A product of connected nestohedra, each named by its canonical key.
// Factors are sorted and points (ground size 1) are omitted, so the empty
// product is the point.
using Product = std::vector<CanonicalKey>;

Product make_product(std::vector<CanonicalKey> factors);
int product_dimension(const Product& p);

// Rational-linear combination of products of connected nestohedra: an
// element of the polytope ring, with disjoint union as + and direct product
// as *.
class PolyExpr {
 public:
  using Terms = std::map<Product, Rational>;

  PolyExpr() = default;
  static PolyExpr point() { return term(Product{}, 1); }
  static PolyExpr term(const Product& p, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Product& p) const;
  // Sum of all coefficients: the number of facets for a boundary.
  Rational total_mass() const;

  void add(const Product& p, const Rational& c);
  PolyExpr& operator+=(const PolyExpr& rhs);
  PolyExpr& operator*=(const Rational& c);
  friend PolyExpr operator+(PolyExpr a, const PolyExpr& b) { return a += b; }
  friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b);
  friend PolyExpr operator*(PolyExpr a, const Rational& c) { return a *= c; }

  friend bool operator==(const PolyExpr&, const PolyExpr&) = default;

 private:
  Terms terms_;
};

// t-antiderivative of g pinned by F(t = 0) = alpha^n: c a^i t^j becomes
// c/(j+1) a^i t^(j+1), then alpha^n is added. g must be zero or homogeneous
// of degree n - 1 (InhomogeneousError / PreconditionError otherwise).
Poly2 integrate_t(const Poly2& g, int n);

// Boundary operator and f-polynomial recursion over the polytope ring.
// fpoly results are memoized by canonical key; the memo is shared between
// threads (concurrent lookups, idempotent inserts).
class RingCalculator {
 public:
  explicit RingCalculator(KeyMode mode = KeyMode::Labels) : mode_(mode) {}
  RingCalculator(const RingCalculator&) = delete;
  RingCalculator& operator=(const RingCalculator&) = delete;

  KeyMode mode() const { return mode_; }

  // P_B as a ring element: the product of its components.
  PolyExpr polytope(const BuildingSet& b) const;
  PolyExpr polytope(const Graph& g) const { return polytope(building_set_from_graph(g)); }

  // d(P_B) = sum over proper members S of P_{B|S} x P_{B-S}. Requires a
  // connected building set.
  PolyExpr boundary(const BuildingSet& b) const;
  // Linear extension with the Leibniz rule on products.
  PolyExpr boundary_expr(const PolyExpr& e) const;
  // Graph form: sum over proper connected G of P(Gamma_G) x P(contracted
  // complement). Requires a connected graph.
  PolyExpr boundary_graph(const Graph& g) const;

  // Validates b, then runs the memoized recursion.
  Poly2 fpoly(const BuildingSet& b);
  Poly2 fpoly(const Graph& g) { return fpoly(building_set_from_graph(g)); }
  Poly2 fpoly_expr(const PolyExpr& e);

  std::size_t memo_size() const;

 private:
  CanonicalKey key(const BuildingSet& b) const { return canonical_key(b, mode_); }
  Poly2 fpoly_unchecked(const BuildingSet& b);
  Poly2 fpoly_connected(const BuildingSet& b);

  KeyMode mode_;
  mutable std::shared_mutex memo_mutex_;
  std::unordered_map<std::string, Poly2> memo_;
};

}  // namespace nesto
