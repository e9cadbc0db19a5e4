#include "nesto/invariants.hpp"

namespace nesto {

std::vector<Integer> fvector_of(const Poly2& fpoly, int dim) {
  std::vector<Integer> out;
  for (int i = 0; i <= dim; ++i) {
    Rational c = fpoly.coeff(i, dim - i);
    if (c.get_den() != 1) throw InternalError("non-integral face count in " + to_string(fpoly));
    out.push_back(c.get_num());
  }
  return out;
}

std::vector<Integer> fvector(RingCalculator& calc, const BuildingSet& b) {
  Poly2 f = calc.fpoly(b);
  return fvector_of(f, homogeneous_degree(f));
}

Poly2 hpoly(RingCalculator& calc, const BuildingSet& b) { return subst_h(calc.fpoly(b)); }

GammaVector gamma(RingCalculator& calc, const BuildingSet& b) { return gamma_extract(hpoly(calc, b)); }

bool dehn_sommerville(RingCalculator& calc, const BuildingSet& b) { return is_symmetric(hpoly(calc, b)); }

bool euler_relation(const std::vector<Integer>& f) {
  if (f.empty()) return false;
  Integer sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += (i % 2 == 0) ? f[i] : Integer(-f[i]);
  return sum == 1;
}

GalPolyResult gal_check_poly(const Poly2& p, int n) {
  GalPolyResult out{gamma_extract(p, n), std::nullopt};
  for (std::size_t i = 0; i < out.gamma.gammas.size(); ++i) {
    if (out.gamma.gammas[i] < 0) {
      out.first_negative = i;
      break;
    }
  }
  return out;
}

GalReport gal_check_series(const Series2& s, FamilyId id) {
  const FamilySpec& fam = family(id);
  GalReport report;
  for (int d = 0; d <= s.order(); ++d) {
    for (int k = 0; k <= d; ++k) {
      const int l = d - k;
      const Poly2& c = s.coeff(k, l);
      auto violate = [&](std::string condition, std::string witness) {
        report.violations.push_back(GalViolation{k, l, std::move(condition), std::move(witness)});
      };
      if (!fam.contains(k, l)) {
        if (!c.is_zero()) violate("outside-family", to_string(c));
        continue;
      }
      ++report.checked;
      if (c.is_zero()) {
        violate("missing", "zero coefficient");
        continue;
      }
      for (const auto& [e, v] : c.terms()) {
        if (2 * (k + l) - 2 * e.total() != fam.grading()) {
          violate("grading", "a^" + std::to_string(e.alpha_deg) + "*t^" + std::to_string(e.t_deg));
          break;
        }
      }
      const int n = fam.dim(k, l);
      if (!is_homogeneous_of(c, n)) {
        violate("homogeneity", to_string(c) + " is not of degree " + std::to_string(n));
        continue;
      }
      if (!is_symmetric(c)) {
        violate("symmetry", to_string(c));
        continue;
      }
      GalPolyResult gal = gal_check_poly(coeff_normalized(s, id, k, l), n);
      if (!gal.passed())
        violate("gamma-nonnegativity", "gamma_" + std::to_string(*gal.first_negative) + " = " +
                                           to_string(gal.gamma.gammas[*gal.first_negative]));
    }
  }
  return report;
}

}  // namespace nesto
