#include "nesto/identities.hpp"

#include "nesto/errors.hpp"
#include "nesto/families.hpp"

namespace nesto {

SeriesBundle make_bundle(int order) {
  SeriesBundle b{order,
                 family_f(FamilyId::Pe, order),
                 family_f(FamilyId::St, order),
                 family_f(FamilyId::NablaBecause, order),
                 family_f(FamilyId::BecauseBecause, order),
                 pe_f_of_sum(order),
                 Series2(order),
                 Series2(order),
                 Series2(order),
                 Series2(order),
                 Series2(order),
                 phi_h(order),
                 exp_linear(order, Poly2::alpha() + Poly2::t(), 0, 1)};
  b.pe_h = subst_h(b.pe_f);
  b.st_h = subst_h(b.st_f);
  b.nb_h = subst_h(b.nb_f);
  b.bb_h = subst_h(b.bb_f);
  b.pe_h_sum = subst_h(b.pe_f_sum);
  return b;
}

std::optional<IdentityFailure> first_difference(const Series2& lhs, const Series2& rhs, int max_degree) {
  for (int d = 0; d <= max_degree; ++d) {
    for (int k = 0; k <= d; ++k) {
      const int l = d - k;
      const Poly2& a = lhs.coeff(k, l);
      const Poly2& b = rhs.coeff(k, l);
      if (a != b) return IdentityFailure{k, l, a, b, a - b};
    }
  }
  return std::nullopt;
}

std::vector<IdentityResult> run_identities(const SeriesBundle& b) {
  const int n = b.order;
  const Poly2 a_plus_t = Poly2::alpha() + Poly2::t();
  const Poly2 a_t = Poly2::alpha() * Poly2::t();
  const Series2 x = Series2::x(n);
  const Series2 y = Series2::y(n);

  std::vector<IdentityResult> out;
  auto check = [&](std::string name, std::string statement, const Series2& lhs, const Series2& rhs, int degree) {
    out.push_back(IdentityResult{std::move(name), std::move(statement), degree, first_difference(lhs, rhs, degree)});
  };

  check("I1", "d/dt Pe_f = Pe_f^2", deriv_t(b.pe_f), b.pe_f * b.pe_f, n);
  check("I2", "d/dt St_f = (x + Pe_f) St_f", deriv_t(b.st_f), (x + b.pe_f) * b.st_f, n);
  check("I3", "d/dt NB_f = NB_f (y + Pe_f(x+y))", deriv_t(b.nb_f), b.nb_f * (y + b.pe_f_sum), n);
  check("I4", "d/dt BB_f = x NB_f(y,x) + y NB_f + BB_f Pe_f(x+y) - (x+y) Pe_f(x+y)", deriv_t(b.bb_f),
        x * swap_xy(b.nb_f) + y * b.nb_f + b.bb_f * b.pe_f_sum - (x + y) * b.pe_f_sum, n);
  check("I5", "d/dx St_h = (a+t) St_h + a t Pe_h St_h", deriv_x(b.st_h), b.st_h * a_plus_t + b.pe_h * b.st_h * a_t,
        n - 1);
  check("I6", "d/dx NB_h = e^{(a+t)y} phi_h + a t NB_h Pe_h(x+y)", deriv_x(b.nb_h),
        b.exp_apt_y * b.phi_h + b.nb_h * b.pe_h_sum * a_t, n - 1);
  check("I7", "d/dy phi_h = a t Pe_h(x+y) phi_h", deriv_y(b.phi_h), b.pe_h_sum * b.phi_h * a_t, n - 1);
  check("I8",
        "d/dx BB_h = a t Pe_h(x+y) BB_h + (a+t) NB_h(y,x) - (a + t + a t (x+y)) Pe_h(x+y) + e^{(a+t)y} phi_h",
        deriv_x(b.bb_h),
        b.pe_h_sum * b.bb_h * a_t + swap_xy(b.nb_h) * a_plus_t -
            (Series2::constant(n, a_plus_t) + (x + y) * a_t) * b.pe_h_sum + b.exp_apt_y * b.phi_h,
        n - 1);
  return out;
}

std::vector<IdentityResult> identity_suite(int order) {
  if (order < 2) throw PreconditionError("identity suite needs truncation order >= 2");
  return run_identities(make_bundle(order));
}

}  // namespace nesto
