#ifndef KNFAM_COCYCLE_CALCULUS_HPP
#define KNFAM_COCYCLE_CALCULUS_HPP

#include <functional>
#include <map>

#include "knfam/current_algebras.hpp"

namespace knfam {

/* Adjoint-valued alternating two-cochain on a current algebra, kept as a
   closed-form rule: a sum of odd-odd shift components

     omega(x (x) A_n, y (x) A_m) = sum_s scalar_s [x,y] (x) A_{n+m+s}

   for n, m both odd (zero otherwise), plus an optional custom basis rule for
   experiments.  Custom rules must be alternating. */
class AdjCochain2 {
public:
  using Rule = std::function<CurrentElement(const CurrentFamily &, int a,
                                            int n, int b, int m)>;

  static AdjCochain2 zero() { return AdjCochain2{}; }
  static AdjCochain2 odd_odd_shift(const MultiPoly &scalar, int shift);
  static AdjCochain2 from_components(std::map<int, MultiPoly> components);
  static AdjCochain2 custom(Rule rule);

  bool is_zero() const { return m_components.empty() && !m_custom; }
  /* shift -> scalar components (empty for custom rules) */
  const std::map<int, MultiPoly> &components() const { return m_components; }

  CurrentElement eval_basis(const CurrentFamily &F, int a, int n, int b,
                            int m) const;
  /* bilinear extension */
  CurrentElement eval(const CurrentFamily &F, const CurrentElement &u,
                      const CurrentElement &v) const;

private:
  std::map<int, MultiPoly> m_components;
  Rule m_custom;
};

/* Linear map on the current algebra defined on basis symbols: a sum of
   odd shift components eta(x (x) A_n) = sum_s scalar_s x (x) A_{n+s} for n
   odd (zero on even degrees). */
class LinMap1 {
public:
  static LinMap1 zero() { return LinMap1{}; }
  static LinMap1 odd_shift(const MultiPoly &scalar, int shift);

  const std::map<int, MultiPoly> &components() const { return m_components; }

  CurrentElement eval_basis(int a, int n) const;
  CurrentElement eval(const CurrentElement &u) const;

  /* The same rule acting on function-algebra elements (for the Harrison
     coboundary operator). */
  FnElement eval_fn_basis(int n) const;
  FnElement eval_fn(const FnElement &f) const;

private:
  std::map<int, MultiPoly> m_components;
};

/* Symmetric two-cochain on the function algebra: odd-odd shift components
   F(A_n, A_m) = sum_s scalar_s A_{n+m+s} for n, m odd, zero otherwise. */
class HarrisonCochain2 {
public:
  static HarrisonCochain2 zero() { return HarrisonCochain2{}; }
  static HarrisonCochain2 odd_odd_shift(const MultiPoly &scalar, int shift);
  static HarrisonCochain2 from_components(std::map<int, MultiPoly> components);

  const std::map<int, MultiPoly> &components() const { return m_components; }

  FnElement eval_basis(int n, int m) const;
  FnElement eval(const FnElement &f, const FnElement &g) const;

private:
  std::map<int, MultiPoly> m_components;
};

/* Six-term adjoint coboundary operator of the base algebra L0:
   d2(omega)(x,y,z) = omega([x,y],z) - omega([x,z],y) + omega([y,z],x)
                      - [x,omega(y,z)] + [y,omega(x,z)] - [z,omega(x,y)]. */
CurrentElement lie_d2_adjoint(const CurrentFamily &L0, const AdjCochain2 &omega,
                              const CurrentElement &x, const CurrentElement &y,
                              const CurrentElement &z);

/* Three-term coboundary:
   d1(eta)(x,y) = eta([x,y]) - [x,eta(y)] - [eta(x),y]. */
CurrentElement lie_d1_adjoint(const CurrentFamily &L0, const LinMap1 &eta,
                              const CurrentElement &x, const CurrentElement &y);

/* First-order deformation cochain of a line family: the coefficient-of-e
   part of the bracket, as an odd-odd shift rule (scalar 3 at shift -2 for
   LineS, scalar -1 at shift -4 for LineInfinity, zero for Laurent).
   NotPolynomialInE for families not parameterized by e. */
AdjCochain2 deformation_differential(const CurrentFamily &family);

/* Same extraction at the function-algebra level (the Harrison cochain of
   the family product). */
HarrisonCochain2 deformation_harrison_cochain(const FamilySpec &spec);

/* omega == d1(eta) on all basis pairs with degrees in [-N,N], in the base
   algebra L0. */
Report verify_coboundary(const CurrentFamily &L0, const AdjCochain2 &omega,
                         const LinMap1 &eta, int window);

/* d2(omega) == 0 on all windowed basis triples of L0. */
Report verify_d2_closed(const CurrentFamily &L0, const AdjCochain2 &omega,
                        int window);

/* Harrison coboundary operators over a base family:
   delta2(F)(a,b,c) = a F(b,c) - F(ab,c) + F(a,bc) - F(a,b) c
   delta1(phi)(a,b) = a phi(b) - phi(ab) + phi(a) b. */
FnElement harrison_delta2(const FamilySpec &base, const HarrisonCochain2 &F,
                          const FnElement &a, const FnElement &b,
                          const FnElement &c);
FnElement harrison_delta1(const FamilySpec &base, const LinMap1 &phi,
                          const FnElement &a, const FnElement &b);

/* delta2(F) == 0 on windowed triples and F == c * delta1(phi) on windowed
   pairs, over the base family. */
Report verify_harrison(const FamilySpec &base, const HarrisonCochain2 &F,
                       const LinMap1 &phi, const MultiPoly &c, int window);

/* Scalar-valued cyclic cocycle condition with respect to the bracket of F:
   d2(psi)(x,y,z) = psi([x,y],z) + psi([y,z],x) + psi([z,x],y); psi is an
   alternating basis rule (a,n,b,m) -> scalar, extended bilinearly. */
using ScalarCochain2 =
    std::function<MultiPoly(int a, int n, int b, int m)>;
MultiPoly lie_d2_trivial(const CurrentFamily &F, const ScalarCochain2 &psi,
                         const CurrentElement &x, const CurrentElement &y,
                         const CurrentElement &z);

} // namespace knfam

#endif
