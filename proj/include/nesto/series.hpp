#pragma once

#include <ostream>
#include <vector>

#include "nesto/poly2.hpp"

namespace nesto {

// Truncated power series in x and y with Poly2 coefficients. Holds every
// coefficient of total degree k + l <= order; products discard anything
// beyond. alpha and t live in the coefficient ring, never in the series.
class Series2 {
 public:
  explicit Series2(int order);

  static Series2 constant(int order, const Poly2& c);
  static Series2 monomial(int order, const Poly2& c, int k, int l);
  static Series2 x(int order) { return monomial(order, 1, 1, 0); }
  static Series2 y(int order) { return monomial(order, 1, 0, 1); }

  int order() const { return order_; }
  // Zero for indices beyond the truncation order.
  const Poly2& coeff(int k, int l) const;
  void set_coeff(int k, int l, Poly2 c);
  bool is_zero() const;

  Series2& operator+=(const Series2& rhs);
  Series2& operator-=(const Series2& rhs);
  Series2& operator*=(const Poly2& c);
  friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
  friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }
  friend Series2 operator*(const Series2& a, const Series2& b);
  friend Series2 operator*(Series2 a, const Poly2& c) { return a *= c; }
  friend Series2 operator*(const Poly2& c, Series2 a) { return a *= c; }
  Series2 operator-() const;

  friend bool operator==(const Series2&, const Series2&) = default;

  // Applies f to every coefficient.
  template <typename F>
  Series2 map(F&& f) const {
    Series2 out(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = f(coeffs_[i]);
    return out;
  }

 private:
  static std::size_t index(int k, int l) {
    const auto d = static_cast<std::size_t>(k + l);
    return d * (d + 1) / 2 + static_cast<std::size_t>(l);
  }
  void check_order(const Series2& rhs) const;

  int order_;
  std::vector<Poly2> coeffs_;
};

// sum_{k<=N} s^k / k!. Requires a zero constant term.
Series2 exp_series(const Series2& s);
// Multiplicative inverse. Requires the constant term to be exactly 1.
Series2 inv_series(const Series2& s);

// eta(u x + v y) = sum_{k>=1} alpha^(k-1) (u x + v y)^k / k!, i.e.
// (e^{alpha z} - 1) / alpha with the division carried out termwise.
Series2 eta_linear(int order, int u, int v);

Series2 deriv_x(const Series2& s);
Series2 deriv_y(const Series2& s);
Series2 deriv_t(const Series2& s);
Series2 swap_xy(const Series2& s);
// Coefficientwise alpha -> alpha - t.
Series2 subst_h(const Series2& s);
// The series with y = 0.
Series2 at_y_zero(const Series2& s);
// The series with t = 0.
Series2 at_t_zero(const Series2& s);

std::ostream& operator<<(std::ostream& os, const Series2& s);

}  // namespace nesto
