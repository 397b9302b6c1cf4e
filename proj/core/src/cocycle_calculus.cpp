#include "knfam/cocycle_calculus.hpp"

#include <sstream>
#include <utility>

#include "knfam/errors.hpp"

namespace knfam {

/* --------------------------------------------------------------------- */
/* AdjCochain2                                                           */
/* --------------------------------------------------------------------- */

namespace {
inline bool degree_odd(int n) { return n % 2 != 0; }
} // namespace

AdjCochain2 AdjCochain2::odd_odd_shift(const MultiPoly &scalar, int shift) {
  AdjCochain2 w;
  if (!scalar.is_zero()) w.m_components[shift] = scalar;
  return w;
}

AdjCochain2 AdjCochain2::from_components(std::map<int, MultiPoly> components) {
  AdjCochain2 w;
  for (auto &[shift, scalar] : components)
    if (!scalar.is_zero()) w.m_components[shift] = scalar;
  return w;
}

AdjCochain2 AdjCochain2::custom(Rule rule) {
  AdjCochain2 w;
  w.m_custom = std::move(rule);
  return w;
}

CurrentElement AdjCochain2::eval_basis(const CurrentFamily &F, int a, int n,
                                       int b, int m) const {
  if (m_custom) return m_custom(F, a, n, b, m);
  CurrentElement out;
  if (!degree_odd(n) || !degree_odd(m)) return out;
  const int dim = F.lie.dim;
  for (const auto &[shift, scalar] : m_components)
    for (int k = 0; k < dim; ++k) {
      const Rational c = F.lie.c(a, b, k);
      if (c != 0) out.add(k, n + m + shift, scalar * MultiPoly(c));
    }
  return out;
}

CurrentElement AdjCochain2::eval(const CurrentFamily &F,
                                 const CurrentElement &u,
                                 const CurrentElement &v) const {
  CurrentElement out;
  for (const auto &[ku, cu] : u.terms())
    for (const auto &[kv, cv] : v.terms()) {
      CurrentElement w =
          eval_basis(F, ku.first, ku.second, kv.first, kv.second);
      const MultiPoly c = cu * cv;
      for (const auto &[kw, cw] : w.terms())
        out.add(kw.first, kw.second, c * cw);
    }
  return out;
}

/* --------------------------------------------------------------------- */
/* LinMap1                                                               */
/* --------------------------------------------------------------------- */

LinMap1 LinMap1::odd_shift(const MultiPoly &scalar, int shift) {
  LinMap1 h;
  if (!scalar.is_zero()) h.m_components[shift] = scalar;
  return h;
}

CurrentElement LinMap1::eval_basis(int a, int n) const {
  CurrentElement out;
  if (!degree_odd(n)) return out;
  for (const auto &[shift, scalar] : m_components)
    out.add(a, n + shift, scalar);
  return out;
}

CurrentElement LinMap1::eval(const CurrentElement &u) const {
  CurrentElement out;
  for (const auto &[k, c] : u.terms()) {
    CurrentElement w = eval_basis(k.first, k.second);
    for (const auto &[kw, cw] : w.terms())
      out.add(kw.first, kw.second, c * cw);
  }
  return out;
}

FnElement LinMap1::eval_fn_basis(int n) const {
  FnElement out;
  if (!degree_odd(n)) return out;
  for (const auto &[shift, scalar] : m_components) out.add(n + shift, scalar);
  return out;
}

FnElement LinMap1::eval_fn(const FnElement &f) const {
  FnElement out;
  for (const auto &[n, c] : f.terms()) {
    FnElement w = eval_fn_basis(n);
    for (const auto &[j, cj] : w.terms()) out.add(j, c * cj);
  }
  return out;
}

/* --------------------------------------------------------------------- */
/* HarrisonCochain2                                                      */
/* --------------------------------------------------------------------- */

HarrisonCochain2 HarrisonCochain2::odd_odd_shift(const MultiPoly &scalar,
                                                 int shift) {
  HarrisonCochain2 F;
  if (!scalar.is_zero()) F.m_components[shift] = scalar;
  return F;
}

HarrisonCochain2
HarrisonCochain2::from_components(std::map<int, MultiPoly> components) {
  HarrisonCochain2 F;
  for (auto &[shift, scalar] : components)
    if (!scalar.is_zero()) F.m_components[shift] = scalar;
  return F;
}

FnElement HarrisonCochain2::eval_basis(int n, int m) const {
  FnElement out;
  if (!degree_odd(n) || !degree_odd(m)) return out;
  for (const auto &[shift, scalar] : m_components)
    out.add(n + m + shift, scalar);
  return out;
}

FnElement HarrisonCochain2::eval(const FnElement &f, const FnElement &g) const {
  FnElement out;
  for (const auto &[n, cn] : f.terms())
    for (const auto &[m, cm] : g.terms()) {
      FnElement w = eval_basis(n, m);
      const MultiPoly c = cn * cm;
      for (const auto &[j, cj] : w.terms()) out.add(j, c * cj);
    }
  return out;
}

/* --------------------------------------------------------------------- */
/* coboundary operators                                                  */
/* --------------------------------------------------------------------- */

CurrentElement lie_d2_adjoint(const CurrentFamily &L0, const AdjCochain2 &omega,
                              const CurrentElement &x, const CurrentElement &y,
                              const CurrentElement &z) {
  CurrentElement out;
  out += omega.eval(L0, current_bracket(L0, x, y), z);
  out -= omega.eval(L0, current_bracket(L0, x, z), y);
  out += omega.eval(L0, current_bracket(L0, y, z), x);
  out -= current_bracket(L0, x, omega.eval(L0, y, z));
  out += current_bracket(L0, y, omega.eval(L0, x, z));
  out -= current_bracket(L0, z, omega.eval(L0, x, y));
  return out;
}

CurrentElement lie_d1_adjoint(const CurrentFamily &L0, const LinMap1 &eta,
                              const CurrentElement &x,
                              const CurrentElement &y) {
  CurrentElement out;
  out += eta.eval(current_bracket(L0, x, y));
  out -= current_bracket(L0, x, eta.eval(y));
  out -= current_bracket(L0, eta.eval(x), y);
  return out;
}

/* --------------------------------------------------------------------- */
/* deformation cochains                                                  */
/* --------------------------------------------------------------------- */

namespace {

std::pair<MultiPoly, MultiPoly> e_linear_parts(const FamilySpec &spec) {
  bool ok = false;
  switch (spec.kind()) {
  case FamilyKind::LineS:
  case FamilyKind::LineInfinity:
  case FamilyKind::Laurent:
    ok = true;
    break;
  case FamilyKind::Custom:
    ok = (spec.c2().is_zero() || spec.c2().depends_on(ParamId::e)) &&
         (spec.c4().is_zero() || spec.c4().depends_on(ParamId::e));
    break;
  default:
    break;
  }
  if (!ok)
    throw NotPolynomialInE("family '" + spec.name() +
                           "' is not parameterized by e");
  return {poly_coefficient_of(spec.c2(), ParamId::e, 1),
          poly_coefficient_of(spec.c4(), ParamId::e, 1)};
}

} // namespace

AdjCochain2 deformation_differential(const CurrentFamily &family) {
  auto [s2, s4] = e_linear_parts(family.spec);
  return AdjCochain2::from_components({{-2, s2}, {-4, s4}});
}

HarrisonCochain2 deformation_harrison_cochain(const FamilySpec &spec) {
  auto [s2, s4] = e_linear_parts(spec);
  return HarrisonCochain2::from_components({{-2, s2}, {-4, s4}});
}

/* --------------------------------------------------------------------- */
/* verification                                                          */
/* --------------------------------------------------------------------- */

Report verify_coboundary(const CurrentFamily &L0, const AdjCochain2 &omega,
                         const LinMap1 &eta, int window) {
  Report rep;
  const int dim = L0.lie.dim;
  for (int n = -window; n <= window; ++n)
    for (int m = -window; m <= window; ++m)
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
          CurrentElement x = CurrentElement::basis(a, n);
          CurrentElement y = CurrentElement::basis(b, m);
          CurrentElement lhs = omega.eval(L0, x, y);
          CurrentElement rhs = lie_d1_adjoint(L0, eta, x, y);
          lhs -= rhs;
          ++rep.checked;
          if (!lhs.is_zero()) {
            std::ostringstream os;
            os << "omega != d1(eta) at (" << L0.lie.basis_name(a) << "(x)A_"
               << n << ", " << L0.lie.basis_name(b) << "(x)A_" << m
               << "): difference " << current_to_string(L0, lhs);
            rep.fail(os.str());
            return rep;
          }
        }
  return rep;
}

Report verify_d2_closed(const CurrentFamily &L0, const AdjCochain2 &omega,
                        int window) {
  Report rep;
  const int dim = L0.lie.dim;
  for (int n = -window; n <= window; ++n)
    for (int m = -window; m <= window; ++m)
      for (int k = -window; k <= window; ++k)
        for (int a = 0; a < dim; ++a)
          for (int b = 0; b < dim; ++b)
            for (int c = 0; c < dim; ++c) {
              CurrentElement x = CurrentElement::basis(a, n);
              CurrentElement y = CurrentElement::basis(b, m);
              CurrentElement z = CurrentElement::basis(c, k);
              CurrentElement d = lie_d2_adjoint(L0, omega, x, y, z);
              ++rep.checked;
              if (!d.is_zero()) {
                std::ostringstream os;
                os << "d2(omega) != 0 at degrees (" << n << "," << m << ","
                   << k << ") basis (" << L0.lie.basis_name(a) << ","
                   << L0.lie.basis_name(b) << "," << L0.lie.basis_name(c)
                   << "): " << current_to_string(L0, d);
                rep.fail(os.str());
                return rep;
              }
            }
  return rep;
}

FnElement harrison_delta2(const FamilySpec &base, const HarrisonCochain2 &F,
                          const FnElement &a, const FnElement &b,
                          const FnElement &c) {
  FnElement out;
  out += multiply(base, a, F.eval(b, c));
  out -= F.eval(multiply(base, a, b), c);
  out += F.eval(a, multiply(base, b, c));
  out -= multiply(base, F.eval(a, b), c);
  return out;
}

FnElement harrison_delta1(const FamilySpec &base, const LinMap1 &phi,
                          const FnElement &a, const FnElement &b) {
  FnElement out;
  out += multiply(base, a, phi.eval_fn(b));
  out -= phi.eval_fn(multiply(base, a, b));
  out += multiply(base, phi.eval_fn(a), b);
  return out;
}

Report verify_harrison(const FamilySpec &base, const HarrisonCochain2 &F,
                       const LinMap1 &phi, const MultiPoly &c, int window) {
  Report rep;
  for (int n = -window; n <= window; ++n)
    for (int m = -window; m <= window; ++m) {
      FnElement an = FnElement::basis(n);
      FnElement am = FnElement::basis(m);
      FnElement diff = F.eval(an, am);
      FnElement d1 = harrison_delta1(base, phi, an, am);
      for (const auto &[j, cj] : d1.terms()) diff.add(j, -(c * cj));
      ++rep.checked;
      if (!diff.is_zero()) {
        std::ostringstream os;
        os << "F != c*delta1(phi) at (A_" << n << ", A_" << m
           << "): difference " << fn_to_string(diff);
        rep.fail(os.str());
        return rep;
      }
    }
  for (int n = -window; n <= window; ++n)
    for (int m = -window; m <= window; ++m)
      for (int k = -window; k <= window; ++k) {
        FnElement d2 = harrison_delta2(base, F, FnElement::basis(n),
                                       FnElement::basis(m),
                                       FnElement::basis(k));
        ++rep.checked;
        if (!d2.is_zero()) {
          std::ostringstream os;
          os << "delta2(F) != 0 at (A_" << n << ", A_" << m << ", A_" << k
             << "): " << fn_to_string(d2);
          rep.fail(os.str());
          return rep;
        }
      }
  return rep;
}

namespace {

MultiPoly eval_psi(const ScalarCochain2 &psi, const CurrentElement &u,
                   const CurrentElement &v) {
  MultiPoly out;
  for (const auto &[ku, cu] : u.terms())
    for (const auto &[kv, cv] : v.terms())
      out += cu * cv * psi(ku.first, ku.second, kv.first, kv.second);
  return out;
}

} // namespace

MultiPoly lie_d2_trivial(const CurrentFamily &F, const ScalarCochain2 &psi,
                         const CurrentElement &x, const CurrentElement &y,
                         const CurrentElement &z) {
  MultiPoly out;
  out += eval_psi(psi, current_bracket(F, x, y), z);
  out += eval_psi(psi, current_bracket(F, y, z), x);
  out += eval_psi(psi, current_bracket(F, z, x), y);
  return out;
}

} // namespace knfam
