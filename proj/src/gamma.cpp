#include "nesto/gamma.hpp"

namespace nesto {

namespace {

Poly2 basis_element(int n, int i) {
  return pow(Poly2::monomial(1, 1, 1), static_cast<unsigned>(i)) *
         pow(Poly2::alpha() + Poly2::t(), static_cast<unsigned>(n - 2 * i));
}

}  // namespace

GammaVector gamma_extract(const Poly2& h) { return gamma_extract(h, homogeneous_degree(h)); }

GammaVector gamma_extract(const Poly2& h, int n) {
  if (n < 0) throw PreconditionError("gamma_extract: negative degree");
  if (!is_homogeneous_of(h, n)) {
    homogeneous_degree(h);  // throws the detailed report
    throw PreconditionError("gamma_extract: polynomial is not of degree " + std::to_string(n));
  }
  if (!is_symmetric(h)) throw PreconditionError("gamma_extract: polynomial " + to_string(h) + " is not symmetric");

  GammaVector out{n, {}};
  Poly2 residual = h;
  for (int i = 0; i <= n / 2; ++i) {
    Rational g = residual.coeff(n - i, i);
    out.gammas.push_back(g);
    if (g != 0) residual -= basis_element(n, i) * g;
  }
  if (!residual.is_zero())
    throw InternalError("gamma_extract: nonzero residual " + to_string(residual) + " after peeling " + to_string(h));
  return out;
}

Poly2 gamma_expand(const GammaVector& g) {
  Poly2 out;
  for (std::size_t i = 0; i < g.gammas.size(); ++i) out += basis_element(g.n, static_cast<int>(i)) * g.gammas[i];
  return out;
}

}  // namespace nesto
