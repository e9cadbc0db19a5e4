#pragma once

#include <json.hpp>

#include "nesto/building_set.hpp"
#include "nesto/gamma.hpp"
#include "nesto/invariants.hpp"
#include "nesto/ring.hpp"
#include "nesto/series.hpp"

namespace nesto {

// [{"i": 2, "j": 0, "c": "1/1"}, ...] sorted by (i, j).
nlohmann::json poly_to_json(const Poly2& p);
// Throws std::invalid_argument on malformed input.
Poly2 poly_from_json(const nlohmann::json& j);

// Sorted list of sorted 1-based element lists.
nlohmann::json building_set_to_json(const BuildingSet& b);

// [{"coefficient": "p/q", "factors": [building sets]}]
nlohmann::json expr_to_json(const PolyExpr& e);

// {"order": N, "coeffs": [{"k", "l", "poly"}]}; zero coefficients omitted.
nlohmann::json series_to_json(const Series2& s);

nlohmann::json gamma_to_json(const GammaVector& g);

// {"checked": n, "violations": [{"index": [k, l], "condition", "witness"}]}
nlohmann::json report_to_json(const GalReport& r);

}  // namespace nesto
