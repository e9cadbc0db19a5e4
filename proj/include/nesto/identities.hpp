#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nesto/series.hpp"

namespace nesto {

// Every series the differential identities mention, computed once. Tests
// tamper with individual members to exercise failure reporting.
struct SeriesBundle {
  int order;
  Series2 pe_f, st_f, nb_f, bb_f;
  Series2 pe_f_sum;  // Pe_f(x + y)
  Series2 pe_h, st_h, nb_h, bb_h;
  Series2 pe_h_sum;  // Pe_h(x + y)
  Series2 phi_h;
  Series2 exp_apt_y;  // e^{(a+t) y}
};

SeriesBundle make_bundle(int order);

struct IdentityFailure {
  int k = 0;
  int l = 0;
  Poly2 lhs;
  Poly2 rhs;
  Poly2 difference;  // lhs - rhs
};

struct IdentityResult {
  std::string name;       // "I1".."I8"
  std::string statement;  // human-readable equation
  // Total degree up to which both sides are compared; x- and y-derivatives
  // lose one order of truncation.
  int compared_degree = 0;
  std::optional<IdentityFailure> failure;

  bool passed() const { return !failure.has_value(); }
};

// First index, in (k + l, k) order, where the sides differ.
std::optional<IdentityFailure> first_difference(const Series2& lhs, const Series2& rhs, int max_degree);

std::vector<IdentityResult> run_identities(const SeriesBundle& b);

// Builds the bundle at `order` and checks I1..I8. Throws PreconditionError
// for order < 2.
std::vector<IdentityResult> identity_suite(int order);

}  // namespace nesto
