#include "nesto/poly2.hpp"

#include <sstream>

namespace nesto {

Poly2::Poly2(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

Poly2 Poly2::monomial(const Rational& c, int alpha_deg, int t_deg) {
  if (alpha_deg < 0 || t_deg < 0) throw PreconditionError("negative exponent in Poly2 monomial");
  Poly2 p;
  if (c != 0) p.terms_.emplace(Exponent{alpha_deg, t_deg}, c);
  return p;
}

Rational Poly2::coeff(int alpha_deg, int t_deg) const {
  auto it = terms_.find(Exponent{alpha_deg, t_deg});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly2::add_term(const Rational& c, Exponent e) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(c, e);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(-c, e);
  return *this;
}

Poly2& Poly2::operator*=(const Poly2& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly2& Poly2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(prod, Exponent{ea.alpha_deg + eb.alpha_deg, ea.t_deg + eb.t_deg});
    }
  }
  return out;
}

Poly2 Poly2::operator-() const {
  Poly2 out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly2 subst_h(const Poly2& p) {
  // c a^i t^j -> c (a - t)^i t^j = c sum_m C(i,m) a^m (-1)^(i-m) t^(i-m+j)
  Poly2 out;
  for (const auto& [e, c] : p.terms()) {
    const int i = e.alpha_deg;
    for (int m = 0; m <= i; ++m) {
      Rational term = c * Rational(binomial(i, m));
      if ((i - m) % 2 == 1) term = -term;
      out.add_term(term, Exponent{m, i - m + e.t_deg});
    }
  }
  return out;
}

int homogeneous_degree(const Poly2& p) {
  if (p.is_zero()) throw PreconditionError("homogeneity degree of the zero polynomial is undefined");
  // Leading term in (alpha degree, t degree) order is the last one.
  const int n = p.terms().rbegin()->first.total();
  std::vector<Exponent> offending;
  for (const auto& [e, c] : p.terms())
    if (e.total() != n) offending.push_back(e);
  if (!offending.empty()) {
    std::ostringstream msg;
    msg << "inhomogeneous polynomial " << p << ": terms";
    for (const auto& e : offending) msg << " a^" << e.alpha_deg << "*t^" << e.t_deg;
    msg << " differ from degree " << n;
    throw InhomogeneousError(msg.str(), std::move(offending));
  }
  return n;
}

bool is_homogeneous_of(const Poly2& p, int n) {
  for (const auto& [e, c] : p.terms())
    if (e.total() != n) return false;
  return true;
}

bool is_symmetric(const Poly2& p) {
  for (const auto& [e, c] : p.terms())
    if (p.coeff(e.t_deg, e.alpha_deg) != c) return false;
  return true;
}

Poly2 deriv_t(const Poly2& p) {
  Poly2 out;
  for (const auto& [e, c] : p.terms())
    if (e.t_deg > 0) out.add_term(c * e.t_deg, Exponent{e.alpha_deg, e.t_deg - 1});
  return out;
}

Poly2 pow(const Poly2& p, unsigned k) {
  Poly2 out(1);
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest alpha power first reads naturally: a^2 + 4*a*t + t^2.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    const bool has_vars = e.alpha_deg > 0 || e.t_deg > 0;
    if (!unit || !has_vars) os << (mag.get_den() == 1 ? mag.get_num().get_str() : mag.get_str());
    bool need_star = !unit || !has_vars;
    auto var = [&](const char* name, int deg) {
      if (deg == 0) return;
      if (need_star) os << "*";
      os << name;
      if (deg > 1) os << "^" << deg;
      need_star = true;
    };
    var("a", e.alpha_deg);
    var("t", e.t_deg);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << to_string(p); }

}  // namespace nesto
