#include "nesto/series.hpp"

#include "nesto/errors.hpp"

namespace nesto {

Series2::Series2(int order) : order_(order) {
  if (order < 0) throw PreconditionError("series order must be non-negative");
  coeffs_.resize(index(0, order) + 1);
}

Series2 Series2::constant(int order, const Poly2& c) { return monomial(order, c, 0, 0); }

Series2 Series2::monomial(int order, const Poly2& c, int k, int l) {
  Series2 s(order);
  if (k + l <= order) s.set_coeff(k, l, c);
  return s;
}

const Poly2& Series2::coeff(int k, int l) const {
  static const Poly2 zero;
  if (k < 0 || l < 0 || k + l > order_) return zero;
  return coeffs_[index(k, l)];
}

void Series2::set_coeff(int k, int l, Poly2 c) {
  if (k < 0 || l < 0 || k + l > order_)
    throw PreconditionError("series index (" + std::to_string(k) + "," + std::to_string(l) + ") beyond order " +
                            std::to_string(order_));
  coeffs_[index(k, l)] = std::move(c);
}

bool Series2::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void Series2::check_order(const Series2& rhs) const {
  if (rhs.order_ != order_)
    throw PreconditionError("series order mismatch: " + std::to_string(order_) + " vs " + std::to_string(rhs.order_));
}

Series2& Series2::operator+=(const Series2& rhs) {
  check_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Series2& Series2::operator-=(const Series2& rhs) {
  check_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Series2& Series2::operator*=(const Poly2& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Series2 operator*(const Series2& a, const Series2& b) {
  a.check_order(b);
  const int n = a.order_;
  Series2 out(n);
  for (int da = 0; da <= n; ++da) {
    for (int la = 0; la <= da; ++la) {
      const Poly2& ca = a.coeffs_[Series2::index(da - la, la)];
      if (ca.is_zero()) continue;
      for (int db = 0; da + db <= n; ++db) {
        for (int lb = 0; lb <= db; ++lb) {
          const Poly2& cb = b.coeffs_[Series2::index(db - lb, lb)];
          if (cb.is_zero()) continue;
          out.coeffs_[Series2::index(da - la + db - lb, la + lb)] += ca * cb;
        }
      }
    }
  }
  return out;
}

Series2 Series2::operator-() const {
  return map([](const Poly2& c) { return -c; });
}

Series2 exp_series(const Series2& s) {
  if (!s.coeff(0, 0).is_zero()) throw PreconditionError("exp_series: argument has a nonzero constant term");
  const int n = s.order();
  Series2 out = Series2::constant(n, 1);
  Series2 power = Series2::constant(n, 1);
  for (int k = 1; k <= n; ++k) {
    power = power * s;
    out += power * Poly2(Rational(1, 1) / Rational(factorial(static_cast<unsigned>(k))));
  }
  return out;
}

Series2 inv_series(const Series2& s) {
  if (s.coeff(0, 0) != Poly2(1)) throw PreconditionError("inv_series: constant term must be exactly 1");
  // 1 / (1 - r) = sum r^k, with r of order >= 1.
  const int n = s.order();
  Series2 r = Series2::constant(n, 1) - s;
  Series2 out = Series2::constant(n, 1);
  Series2 power = Series2::constant(n, 1);
  for (int k = 1; k <= n; ++k) {
    power = power * r;
    out += power;
  }
  return out;
}

Series2 eta_linear(int order, int u, int v) {
  if (u == 0 && v == 0) throw PreconditionError("eta_linear: (u, v) must not be (0, 0)");
  // Coefficient of x^a y^b: alpha^(a+b-1) u^a v^b / (a! b!).
  Series2 out(order);
  for (int d = 1; d <= order; ++d) {
    for (int b = 0; b <= d; ++b) {
      const int a = d - b;
      Rational c = Rational(Integer(1)) / Rational(factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(b)));
      Integer uv;
      mpz_pow_ui(uv.get_mpz_t(), Integer(u).get_mpz_t(), static_cast<unsigned long>(a));
      Integer vv;
      mpz_pow_ui(vv.get_mpz_t(), Integer(v).get_mpz_t(), static_cast<unsigned long>(b));
      c *= Rational(uv * vv);
      if (c != 0) out.set_coeff(a, b, Poly2::monomial(c, d - 1, 0));
    }
  }
  return out;
}

Series2 deriv_x(const Series2& s) {
  Series2 out(s.order());
  for (int d = 1; d <= s.order(); ++d)
    for (int l = 0; l < d; ++l) {
      const int k = d - l;
      if (!s.coeff(k, l).is_zero()) out.set_coeff(k - 1, l, s.coeff(k, l) * Rational(k));
    }
  return out;
}

Series2 deriv_y(const Series2& s) {
  Series2 out(s.order());
  for (int d = 1; d <= s.order(); ++d)
    for (int l = 1; l <= d; ++l) {
      const int k = d - l;
      if (!s.coeff(k, l).is_zero()) out.set_coeff(k, l - 1, s.coeff(k, l) * Rational(l));
    }
  return out;
}

Series2 deriv_t(const Series2& s) {
  return s.map([](const Poly2& c) { return deriv_t(c); });
}

Series2 swap_xy(const Series2& s) {
  Series2 out(s.order());
  for (int d = 0; d <= s.order(); ++d)
    for (int l = 0; l <= d; ++l) out.set_coeff(l, d - l, s.coeff(d - l, l));
  return out;
}

Series2 subst_h(const Series2& s) {
  return s.map([](const Poly2& c) { return subst_h(c); });
}

Series2 at_y_zero(const Series2& s) {
  Series2 out(s.order());
  for (int k = 0; k <= s.order(); ++k) out.set_coeff(k, 0, s.coeff(k, 0));
  return out;
}

Series2 at_t_zero(const Series2& s) {
  return s.map([](const Poly2& c) {
    Poly2 out;
    for (const auto& [e, v] : c.terms())
      if (e.t_deg == 0) out.add_term(v, e);
    return out;
  });
}

std::ostream& operator<<(std::ostream& os, const Series2& s) {
  bool first = true;
  for (int d = 0; d <= s.order(); ++d)
    for (int l = 0; l <= d; ++l) {
      const Poly2& c = s.coeff(d - l, l);
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")*x^" << d - l << "*y^" << l;
    }
  if (first) os << "0";
  return os << " + O(" << s.order() + 1 << ")";
}

}  // namespace nesto
