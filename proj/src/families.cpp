#include "nesto/families.hpp"

#include <array>

namespace nesto {

namespace {

constexpr std::array<FamilySpec, 5> kFamilies{{
    {FamilyId::Pe, "pe"},
    {FamilyId::St, "st"},
    {FamilyId::StarMarked, "starmarked"},
    {FamilyId::NablaBecause, "nabla-because"},
    {FamilyId::BecauseBecause, "because-because"},
}};

Series2 one_minus_t_eta(int order, int u, int v) {
  return Series2::constant(order, 1) - eta_linear(order, u, v) * Poly2::t();
}

}  // namespace

bool FamilySpec::contains(int k, int l) const {
  if (k < 0 || l < 0) return false;
  switch (id) {
    case FamilyId::Pe: return k >= 1 && l == 0;
    case FamilyId::St: return l == 0;
    case FamilyId::StarMarked: return l == 1;
    case FamilyId::NablaBecause: return k >= 1;
    case FamilyId::BecauseBecause: return (k >= 1 && l >= 1) || (k + l == 1);
  }
  return false;
}

Graph FamilySpec::graph(int k, int l) const {
  if (!contains(k, l))
    throw NotInFamilyError("index (" + std::to_string(k) + "," + std::to_string(l) + ") is not in family " +
                           std::string(name));
  switch (id) {
    case FamilyId::Pe: return Graph::complete(k);
    case FamilyId::St:
    case FamilyId::StarMarked: return Graph::star(k);
    case FamilyId::NablaBecause: return Graph::join(Graph::complete(k), Graph::empty(l));
    case FamilyId::BecauseBecause: return Graph::bipartite(k, l);
  }
  throw InternalError("unknown family");
}

int FamilySpec::dim(int k, int l) const {
  switch (id) {
    case FamilyId::Pe: return k - 1;
    case FamilyId::St:
    case FamilyId::StarMarked: return k;
    case FamilyId::NablaBecause:
    case FamilyId::BecauseBecause: return k + l - 1;
  }
  throw InternalError("unknown family");
}

Rational FamilySpec::scale(int k, int l) const {
  return Rational(Integer(1)) /
         Rational(factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(l)));
}

int FamilySpec::grading() const { return id == FamilyId::St ? 0 : 2; }

const FamilySpec& family(FamilyId id) { return kFamilies[static_cast<std::size_t>(id)]; }

std::span<const FamilySpec> all_families() { return kFamilies; }

std::optional<FamilyId> parse_family(std::string_view name) {
  for (const auto& f : kFamilies)
    if (f.name == name) return f.id;
  return std::nullopt;
}

Series2 exp_linear(int order, const Poly2& c, int u, int v) {
  Series2 arg = Series2::monomial(order, c * Rational(u), 1, 0) + Series2::monomial(order, c * Rational(v), 0, 1);
  return exp_series(arg);
}

Series2 family_f(FamilyId id, int order) {
  if (order < 1) throw PreconditionError("family series need order >= 1");
  const Poly2 a = Poly2::alpha();
  const Poly2 a_plus_t = Poly2::alpha() + Poly2::t();
  switch (id) {
    case FamilyId::Pe: return eta_linear(order, 1, 0) * inv_series(one_minus_t_eta(order, 1, 0));
    case FamilyId::St: return exp_linear(order, a_plus_t, 1, 0) * inv_series(one_minus_t_eta(order, 1, 0));
    case FamilyId::StarMarked: return Series2::y(order) * family_f(FamilyId::St, order);
    case FamilyId::NablaBecause:
      return exp_linear(order, a_plus_t, 0, 1) * eta_linear(order, 1, 0) * inv_series(one_minus_t_eta(order, 1, 1));
    case FamilyId::BecauseBecause: {
      const Series2 eta_x = eta_linear(order, 1, 0);
      const Series2 eta_y = eta_linear(order, 0, 1);
      Series2 bracket = exp_linear(order, a_plus_t, 1, 0) * eta_y + exp_linear(order, a_plus_t, 0, 1) * eta_x +
                        eta_x * eta_y * a - exp_linear(order, a, 1, 0) * eta_y - exp_linear(order, a, 0, 1) * eta_x;
      return bracket * inv_series(one_minus_t_eta(order, 1, 1)) + Series2::x(order) + Series2::y(order);
    }
  }
  throw InternalError("unknown family");
}

Series2 family_h(FamilyId id, int order) { return subst_h(family_f(id, order)); }

Series2 pe_f_of_sum(int order) { return eta_linear(order, 1, 1) * inv_series(one_minus_t_eta(order, 1, 1)); }

Series2 phi_h(int order) {
  Series2 numerator = exp_linear(order, Poly2::alpha(), 1, 0) + eta_linear(order, 1, 0) * Poly2::t();
  Series2 phi_f = exp_linear(order, -Poly2::t(), 0, 1) * numerator * inv_series(one_minus_t_eta(order, 1, 1));
  return subst_h(phi_f);
}

Poly2 coeff_normalized(const Series2& s, FamilyId id, int k, int l) {
  const FamilySpec& fam = family(id);
  if (!fam.contains(k, l))
    throw NotInFamilyError("index (" + std::to_string(k) + "," + std::to_string(l) + ") is not in family " +
                           std::string(fam.name));
  if (k + l > s.order())
    throw PreconditionError("index (" + std::to_string(k) + "," + std::to_string(l) + ") exceeds truncation order " +
                            std::to_string(s.order()));
  return s.coeff(k, l) * Rational(factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(l)));
}

}  // namespace nesto
