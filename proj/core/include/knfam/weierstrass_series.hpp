#ifndef KNFAM_WEIERSTRASS_SERIES_HPP
#define KNFAM_WEIERSTRASS_SERIES_HPP

#include <vector>

#include "knfam/exact_arith.hpp"

namespace knfam {

/* Truncated formal Laurent series in z with MultiPoly coefficients.

   Invariants: coeffs spans exponents low .. trunc inclusive (so its size is
   trunc - low + 1); coeffs.front() is nonzero unless the series is
   identically zero up to truncation, in which case coeffs is empty and
   low == trunc + 1.  Arithmetic never reports coefficients beyond trunc. */
struct LaurentSeries {
  int low = 1;
  int trunc = 0;
  std::vector<MultiPoly> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  /* Coefficient at the given exponent; zero below low, error above trunc. */
  const MultiPoly &coeff(int exp) const;

  static LaurentSeries zero(int trunc);
  static LaurentSeries monomial(int exp, const MultiPoly &c, int trunc);
};

/* Canonicalizing constructor: strips leading zero coefficients. coeffs[i]
   is the coefficient of z^(low+i) and must span low .. trunc. */
LaurentSeries make_series(int low, int trunc, std::vector<MultiPoly> coeffs);

LaurentSeries operator+(const LaurentSeries &f, const LaurentSeries &g);
LaurentSeries operator-(const LaurentSeries &f, const LaurentSeries &g);
LaurentSeries operator-(const LaurentSeries &f);
LaurentSeries operator*(const LaurentSeries &f, const LaurentSeries &g);

LaurentSeries series_scale(const LaurentSeries &f, const MultiPoly &c);

/* Multiplicative inverse.  Requires the leading coefficient to be a nonzero
   rational constant (InversionLeadingNonUnit otherwise); the result is exact
   to relative precision, i.e. trunc' = trunc - 2*low. */
LaurentSeries series_invert(const LaurentSeries &f);

/* Integer power; negative exponents go through series_invert. */
LaurentSeries series_pow(const LaurentSeries &f, int exp);

/* Formal derivative z^n -> n z^(n-1); trunc drops by one. */
LaurentSeries series_derivative(const LaurentSeries &f);

/* Forget coefficients above the given order (no-op if already shallower). */
LaurentSeries series_truncate(const LaurentSeries &f, int order);

/* Expansion of the Weierstrass p-function at z = 0 with g2, g3 symbolic:
   p(z) = z^-2 + sum_{k>=1} c_k z^(2k), the c_k determined by the recursion
   obtained from (p')^2 = 4 p^3 - g2 p - g3 (c_1 = g2/20, c_2 = g3/28).
   Coefficients are reported up to z^order; requires order >= 4. */
LaurentSeries wp_series(int order);

/* The default parameter bindings: g2, g3 expressed through the branch
   points with e3 = -(e1+e2), i.e. g2 = 4(e1^2+e1*e2+e2^2),
   g3 = -4*e1*e2*(e1+e2). */
const SubstMap &default_e_bindings();

/* Laurent expansion at z = 0 of the basis function A_n:
   A_{2k} = (p - e1)^k and A_{2k+1} = 1/2 p' (p - e1)^(k-1), k running over
   all integers.  The lowest exponent is exactly -n; coefficients land in
   Q[e1,e2] under the default bindings.  Results are memoized. */
LaurentSeries basis_series(int n, int order,
                           const SubstMap &e_bindings = default_e_bindings());

/* Coefficient of 1/z.  Zero when -1 < low; TruncationTooShallow when
   trunc < -1. */
MultiPoly residue(const LaurentSeries &ser);

/* residue(f*g) computed as the single convolution coefficient at z^-1,
   without forming the full product. */
MultiPoly residue_of_product(const LaurentSeries &f, const LaurentSeries &g);

} // namespace knfam

#endif
