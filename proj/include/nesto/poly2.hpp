#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "nesto/errors.hpp"
#include "nesto/rational.hpp"

namespace nesto {

// Exponent pair of a monomial alpha^alpha_deg * t^t_deg.
struct Exponent {
  int alpha_deg = 0;
  int t_deg = 0;

  int total() const { return alpha_deg + t_deg; }
  auto operator<=>(const Exponent&) const = default;
};

// Sparse polynomial in alpha and t with exact rational coefficients.
// Zero coefficients are never stored; iteration order is lexicographic on
// (alpha degree, t degree).
class Poly2 {
 public:
  using Terms = std::map<Exponent, Rational>;

  Poly2() = default;
  Poly2(const Rational& c);  // NOLINT: constants convert implicitly
  Poly2(long c) : Poly2(Rational(c)) {}  // NOLINT

  static Poly2 monomial(const Rational& c, int alpha_deg, int t_deg);
  static Poly2 alpha() { return monomial(1, 1, 0); }
  static Poly2 t() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(int alpha_deg, int t_deg) const;

  // Adds c * alpha^i t^j in place, pruning a coefficient that cancels to 0.
  void add_term(const Rational& c, Exponent e);

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2& operator*=(const Poly2& rhs);
  Poly2& operator*=(const Rational& c);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Rational& c) { return a *= c; }
  friend Poly2 operator*(const Rational& c, Poly2 a) { return a *= c; }
  friend Poly2 operator*(Poly2 a, long c) { return a *= Rational(c); }
  friend Poly2 operator*(long c, Poly2 a) { return a *= Rational(c); }
  Poly2 operator-() const;

  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  Terms terms_;
};

// Every term of an inhomogeneous polynomial, grouped for diagnostics.
class InhomogeneousError : public PreconditionError {
 public:
  InhomogeneousError(const std::string& what, std::vector<Exponent> offending)
      : PreconditionError(what), offending_(std::move(offending)) {}
  const std::vector<Exponent>& offending() const { return offending_; }

 private:
  std::vector<Exponent> offending_;
};

// p(alpha - t, t): the f-polynomial to h-polynomial change of variables.
Poly2 subst_h(const Poly2& p);

// Degree n with every term of total degree n. Throws PreconditionError for
// the zero polynomial and InhomogeneousError (listing the terms whose degree
// differs from the leading term's) otherwise.
int homogeneous_degree(const Poly2& p);

// True when the zero polynomial or every term has total degree n.
bool is_homogeneous_of(const Poly2& p, int n);

// Coefficient of alpha^i t^j equals that of alpha^j t^i for all i, j.
bool is_symmetric(const Poly2& p);

Poly2 deriv_t(const Poly2& p);
Poly2 pow(const Poly2& p, unsigned k);

// "a^2 + 4*a*t + t^2"; "0" for the zero polynomial. Coefficients print as
// p/q only when non-integral.
std::string to_string(const Poly2& p);
std::ostream& operator<<(std::ostream& os, const Poly2& p);

}  // namespace nesto
