#include "nesto/ring.hpp"

#include <algorithm>
#include <mutex>

#include "nesto/errors.hpp"

namespace nesto {

Product make_product(std::vector<CanonicalKey> factors) {
  std::erase_if(factors, [](const CanonicalKey& k) { return k.ground_size() <= 1; });
  std::sort(factors.begin(), factors.end());
  return factors;
}

int product_dimension(const Product& p) {
  int dim = 0;
  for (const auto& k : p) dim += k.ground_size() - 1;
  return dim;
}

PolyExpr PolyExpr::term(const Product& p, const Rational& c) {
  PolyExpr e;
  e.add(p, c);
  return e;
}

Rational PolyExpr::coeff(const Product& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational PolyExpr::total_mass() const {
  Rational sum = 0;
  for (const auto& [p, c] : terms_) sum += c;
  return sum;
}

void PolyExpr::add(const Product& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

PolyExpr& PolyExpr::operator+=(const PolyExpr& rhs) {
  for (const auto& [p, c] : rhs.terms_) add(p, c);
  return *this;
}

PolyExpr& PolyExpr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
  PolyExpr out;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      Product joined = pa;
      joined.insert(joined.end(), pb.begin(), pb.end());
      out.add(make_product(std::move(joined)), ca * cb);
    }
  }
  return out;
}

Poly2 integrate_t(const Poly2& g, int n) {
  if (n < 0) throw PreconditionError("integrate_t: negative dimension");
  if (!g.is_zero()) {
    const int deg = homogeneous_degree(g);
    if (deg != n - 1)
      throw PreconditionError("integrate_t: integrand " + to_string(g) + " has degree " + std::to_string(deg) +
                              ", expected " + std::to_string(n - 1));
  }
  Poly2 out;
  for (const auto& [e, c] : g.terms()) out.add_term(c / (e.t_deg + 1), Exponent{e.alpha_deg, e.t_deg + 1});
  out.add_term(1, Exponent{n, 0});
  return out;
}

PolyExpr RingCalculator::polytope(const BuildingSet& b) const {
  std::vector<CanonicalKey> factors;
  for (const auto& c : components(b)) factors.push_back(key(c));
  return PolyExpr::term(make_product(std::move(factors)), 1);
}

PolyExpr RingCalculator::boundary(const BuildingSet& b) const {
  if (!b.is_connected()) throw PreconditionError("boundary: building set is not connected; use boundary_expr");
  PolyExpr out;
  for (Mask s : b.sets()) {
    if (s == b.ground()) continue;
    std::vector<CanonicalKey> factors;
    factors.push_back(key(restriction(b, s)));
    for (const auto& c : components(removal(b, s))) factors.push_back(key(c));
    out.add(make_product(std::move(factors)), 1);
  }
  return out;
}

PolyExpr RingCalculator::boundary_expr(const PolyExpr& e) const {
  PolyExpr out;
  for (const auto& [product, coeff] : e.terms()) {
    for (std::size_t i = 0; i < product.size(); ++i) {
      Product rest = product;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      out += boundary(decode_key(product[i])) * PolyExpr::term(rest, coeff);
    }
  }
  return out;
}

PolyExpr RingCalculator::boundary_graph(const Graph& g) const {
  if (!g.is_connected()) throw PreconditionError("boundary_graph: graph is not connected");
  PolyExpr out;
  const Mask all = g.all_nodes();
  for (Mask sub = 1; sub < all; ++sub) {
    if (!g.induces_connected(sub)) continue;
    std::vector<CanonicalKey> factors;
    factors.push_back(key(building_set_from_graph(induced_subgraph(g, sub))));
    for (const auto& c : components(building_set_from_graph(contracted_complement(g, sub)))) factors.push_back(key(c));
    out.add(make_product(std::move(factors)), 1);
  }
  return out;
}

Poly2 RingCalculator::fpoly(const BuildingSet& b) {
  if (auto violation = validate(b)) throw PreconditionError("fpoly: invalid building set: " + violation->describe());
  return fpoly_unchecked(b);
}

Poly2 RingCalculator::fpoly_unchecked(const BuildingSet& b) {
  if (b.ground_size() <= 1) return Poly2(1);
  if (!b.is_connected()) {
    Poly2 out(1);
    for (const auto& c : components(b)) out *= fpoly_connected(c);
    return out;
  }
  return fpoly_connected(b);
}

Poly2 RingCalculator::fpoly_connected(const BuildingSet& b) {
  if (b.ground_size() <= 1) return Poly2(1);
  const CanonicalKey k = key(b);
  {
    std::shared_lock lock(memo_mutex_);
    if (auto it = memo_.find(k.bytes); it != memo_.end()) return it->second;
  }
  Poly2 result = integrate_t(fpoly_expr(boundary(b)), b.ground_size() - 1);
  std::unique_lock lock(memo_mutex_);
  return memo_.try_emplace(k.bytes, std::move(result)).first->second;
}

Poly2 RingCalculator::fpoly_expr(const PolyExpr& e) {
  Poly2 out;
  for (const auto& [product, coeff] : e.terms()) {
    Poly2 term(coeff);
    for (const auto& factor : product) term *= fpoly_connected(decode_key(factor));
    out += term;
  }
  return out;
}

std::size_t RingCalculator::memo_size() const {
  std::shared_lock lock(memo_mutex_);
  return memo_.size();
}

}  // namespace nesto
