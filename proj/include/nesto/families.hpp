#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "nesto/errors.hpp"
#include "nesto/graph.hpp"
#include "nesto/series.hpp"

namespace nesto {

enum class FamilyId { Pe, St, StarMarked, NablaBecause, BecauseBecause };

class NotInFamilyError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A family of graphical nestohedra laid out in a generating series:
// the polytope of graph(k, l) sits at x^k y^l / (k! l!).
//
//   Pe              complete(k)                    k >= 1, l = 0
//   St              star(k)                        k >= 0, l = 0
//   StarMarked      star(k)                        k >= 0, l = 1
//   NablaBecause    join(complete(k), empty(l))    k >= 1, l >= 0
//   BecauseBecause  bipartite(k, l)                k, l >= 1, plus (1,0), (0,1)
struct FamilySpec {
  FamilyId id;
  std::string_view name;

  bool contains(int k, int l) const;
  // Throws NotInFamilyError outside the index set.
  Graph graph(int k, int l) const;
  int dim(int k, int l) const;
  // 1 / (k! l!).
  Rational scale(int k, int l) const;
  // Every monomial a^i t^j x^k y^l of the series has 2(k+l) - 2(i+j) equal
  // to this constant.
  int grading() const;
};

const FamilySpec& family(FamilyId id);
std::span<const FamilySpec> all_families();
// "pe", "st", "starmarked", "nabla-because", "because-because".
std::optional<FamilyId> parse_family(std::string_view name);

// Closed-form f-series, evaluated without dividing by alpha:
//   Pe  = eta(x) / (1 - t eta(x))
//   St  = e^{(a+t)x} / (1 - t eta(x))
//   StarMarked = y St(x)
//   NablaBecause = e^{(a+t)y} eta(x) / (1 - t eta(x+y))
//   BecauseBecause = [e^{(a+t)x} eta(y) + e^{(a+t)y} eta(x) + a eta(x) eta(y)
//                     - e^{ax} eta(y) - e^{ay} eta(x)] / (1 - t eta(x+y)) + x + y
// Throws PreconditionError for order < 1.
Series2 family_f(FamilyId id, int order);
Series2 family_h(FamilyId id, int order);

// Pe_f with eta(x+y) substituted for eta(x).
Series2 pe_f_of_sum(int order);

// phi_h = (a e^{ax} - t e^{tx}) / (a e^{t(x+y)} - t e^{a(x+y)}), computed as
// subst_h of e^{-ty} (e^{ax} + t eta(x)) / (1 - t eta(x+y)).
Series2 phi_h(int order);

// e^{c (u x + v y)} for a coefficient c.
Series2 exp_linear(int order, const Poly2& c, int u, int v);

// k! l! times the coefficient of x^k y^l: the f- (or h-) polynomial of the
// family member at (k, l). Throws NotInFamilyError outside the index set and
// PreconditionError beyond the truncation order.
Poly2 coeff_normalized(const Series2& s, FamilyId id, int k, int l);

}  // namespace nesto
