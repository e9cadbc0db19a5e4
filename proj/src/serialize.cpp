#include "nesto/serialize.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nesto {

using nlohmann::json;

json poly_to_json(const Poly2& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"i", e.alpha_deg}, {"j", e.t_deg}, {"c", to_string(c)}});
  return out;
}

Poly2 poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("Poly2 JSON must be an array");
  Poly2 out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("i") || !term.contains("j") || !term.contains("c"))
      throw std::invalid_argument("Poly2 term needs i, j and c");
    const int i = term.at("i").get<int>();
    const int jdeg = term.at("j").get<int>();
    if (i < 0 || jdeg < 0) throw std::invalid_argument("Poly2 exponents must be non-negative");
    out.add_term(parse_rational(term.at("c").get<std::string>()), Exponent{i, jdeg});
  }
  return out;
}

json building_set_to_json(const BuildingSet& b) {
  std::vector<std::vector<int>> lists;
  for (Mask s : b.sets()) {
    std::vector<int> elems;
    for (Mask m = s; m != 0; m &= m - 1) elems.push_back(std::countr_zero(m) + 1);
    lists.push_back(std::move(elems));
  }
  std::sort(lists.begin(), lists.end());
  return lists;
}

json expr_to_json(const PolyExpr& e) {
  json out = json::array();
  for (const auto& [product, c] : e.terms()) {
    json factors = json::array();
    for (const auto& key : product) factors.push_back(building_set_to_json(decode_key(key)));
    out.push_back({{"coefficient", to_string(c)}, {"factors", factors}});
  }
  return out;
}

json series_to_json(const Series2& s) {
  json coeffs = json::array();
  for (int d = 0; d <= s.order(); ++d)
    for (int l = 0; l <= d; ++l) {
      const Poly2& c = s.coeff(d - l, l);
      if (!c.is_zero()) coeffs.push_back({{"k", d - l}, {"l", l}, {"poly", poly_to_json(c)}});
    }
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

json gamma_to_json(const GammaVector& g) {
  json out = json::array();
  for (const auto& c : g.gammas) out.push_back(to_string(c));
  return out;
}

json report_to_json(const GalReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"index", {v.k, v.l}}, {"condition", v.condition}, {"witness", v.witness}});
  return {{"checked", r.checked}, {"violations", violations}};
}

}  // namespace nesto
