#include "knfam/current_algebras.hpp"

#include <sstream>

namespace knfam {

CurrentElement CurrentElement::basis(int a, int n, MultiPoly coeff) {
  CurrentElement u;
  u.add(a, n, coeff);
  return u;
}

void CurrentElement::add(int a, int n, const MultiPoly &c) {
  if (c.is_zero())
    return;
  Key key{a, n};
  auto [it, inserted] = m_terms.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      m_terms.erase(it);
  }
}

CurrentElement &CurrentElement::operator+=(const CurrentElement &o) {
  for (const auto &[k, c] : o.m_terms)
    add(k.first, k.second, c);
  return *this;
}

CurrentElement &CurrentElement::operator-=(const CurrentElement &o) {
  for (const auto &[k, c] : o.m_terms)
    add(k.first, k.second, -c);
  return *this;
}

CurrentElement CurrentElement::scaled(const MultiPoly &c) const {
  CurrentElement r;
  for (const auto &[k, x] : m_terms)
    r.add(k.first, k.second, x * c);
  return r;
}

CurrentFamily::CurrentFamily(FiniteLieAlgebra lie_, FamilySpec spec_)
    : lie(make_validated(std::move(lie_))), spec(std::move(spec_)) {}

std::string current_to_string(const CurrentFamily &F,
                              const CurrentElement &u) {
  if (u.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[k, c] : u.terms()) {
    if (!first)
      os << " + ";
    if (c != MultiPoly(1))
      os << "(" << poly_to_string(c) << ")*";
    os << F.lie.basis_name(k.first) << "(x)A[" << k.second << "]";
    first = false;
  }
  return os.str();
}

CurrentElement current_bracket(const CurrentFamily &F, const CurrentElement &u,
                               const CurrentElement &v) {
  CurrentElement r;
  for (const auto &[ku, cu] : u.terms())
    for (const auto &[kv, cv] : v.terms()) {
      const auto &[a, n] = ku;
      const auto &[b, m] = kv;
      FnElement prod = basis_product(F.spec, n, m);
      if (prod.is_zero())
        continue;
      MultiPoly cuv = cu * cv;
      for (int k = 0; k < F.lie.dim; ++k) {
        const Rational &c = F.lie.c(a, b, k);
        if (c == 0)
          continue;
        MultiPoly factor = cuv * MultiPoly(c);
        for (const auto &[j, pc] : prod.terms())
          r.add(k, j, factor * pc);
      }
    }
  return r;
}

Report verify_jacobi(const CurrentFamily &F, int window) {
  Report rep;
  rep.detail = "antisymmetry + Jacobi for " + std::to_string(F.lie.dim) +
               "-dim Lie algebra (x) " + F.spec.name() + " on window " +
               std::to_string(window);
  const int d = F.lie.dim;
  auto basis = [](int a, int n) { return CurrentElement::basis(a, n); };
  for (int n = -window; n <= window; ++n)
    for (int m = -window; m <= window; ++m)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          CurrentElement anti =
              current_bracket(F, basis(a, n), basis(b, m)) +
              current_bracket(F, basis(b, m), basis(a, n));
          ++rep.checked;
          if (!anti.is_zero()) {
            rep.fail("antisymmetry fails at ([" + F.lie.basis_name(a) +
                     "(x)A[" + std::to_string(n) + "], " +
                     F.lie.basis_name(b) + "(x)A[" + std::to_string(m) +
                     "]]): " + current_to_string(F, anti));
            return rep;
          }
        }
  for (int n = -window; n <= window; ++n)
    for (int m = -window; m <= window; ++m)
      for (int k = -window; k <= window; ++k)
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
              CurrentElement u = basis(a, n), v = basis(b, m), w = basis(c, k);
              CurrentElement jac =
                  current_bracket(F, current_bracket(F, u, v), w) +
                  current_bracket(F, current_bracket(F, v, w), u) +
                  current_bracket(F, current_bracket(F, w, u), v);
              ++rep.checked;
              if (!jac.is_zero()) {
                std::ostringstream os;
                os << "Jacobi fails at (" << F.lie.basis_name(a) << "(x)A["
                   << n << "], " << F.lie.basis_name(b) << "(x)A[" << m
                   << "], " << F.lie.basis_name(c) << "(x)A[" << k
                   << "]): " << current_to_string(F, jac);
                rep.fail(os.str());
                return rep;
              }
            }
  return rep;
}

/* Compare two family product rules pairwise on the window after applying a
   square-substitution alpha^2 -> subst to the second rule's coefficients. */
static Report compare_rules(const FamilySpec &lhs, const FamilySpec &rhs,
                            ParamId sq_param, const MultiPoly &sq_value,
                            int window, const std::string &what) {
  Report rep;
  rep.detail = what;
  for (int n = -window; n <= window; ++n)
    for (int m = -window; m <= window; ++m) {
      FnElement pl = basis_product(lhs, n, m);
      FnElement pr = basis_product(rhs, n, m);
      FnElement mapped;
      for (const auto &[j, c] : pr.terms())
        mapped.add(j, poly_substitute_square(c, sq_param, sq_value));
      ++rep.checked;
      if (pl != mapped) {
        rep.fail(what + ": A[" + std::to_string(n) + "]*A[" +
                 std::to_string(m) + "] gives " + fn_to_string(pl) +
                 " versus " + fn_to_string(mapped));
        return rep;
      }
    }
  return rep;
}

Report degeneration_identifications(int window) {
  Report rep;
  rep.detail = "degeneration identifications on window " +
               std::to_string(window);
  const MultiPoly e = MultiPoly::var(ParamId::e);

  /* (i) s = 1 and s = -2: the nodal lines match the three-point family
     under alpha^2 -> 3e. */
  for (Rational sval : {Rational(1), Rational(-2)}) {
    FamilySpec line = specialize_family(FamilySpec::line_s(),
                                        {{ParamId::s, MultiPoly(sval)}});
    rep.absorb(compare_rules(line, FamilySpec::three_point(), ParamId::alpha,
                             MultiPoly(3) * e, window,
                             "s=" + rational_to_string(sval) +
                                 " vs threepoint under alpha^2->3e"));
    if (!rep.pass)
      return rep;
  }

  /* (ii) s = -1/2: the cuspidal line matches the W subalgebra under
     alpha^2 -> -3e/2. */
  {
    FamilySpec line = specialize_family(
        FamilySpec::line_s(), {{ParamId::s, MultiPoly(Rational(-1, 2))}});
    rep.absorb(compare_rules(line, FamilySpec::subalgebra_w(), ParamId::alpha,
                             MultiPoly(Rational(-3, 2)) * e, window,
                             "s=-1/2 vs w under alpha^2->-3e/2"));
    if (!rep.pass)
      return rep;
  }

  /* (iii) (e1,e2) = (0,0) is the Laurent algebra. */
  {
    FamilySpec fiber = specialize_family(FamilySpec::elliptic(),
                                         {{ParamId::e1, MultiPoly(0)},
                                          {ParamId::e2, MultiPoly(0)}});
    ++rep.checked;
    if (fiber.kind() != FamilyKind::Laurent) {
      rep.fail("elliptic at (0,0) did not specialize to laurent");
      return rep;
    }
    rep.absorb(compare_rules(fiber, FamilySpec::laurent(), ParamId::alpha,
                             MultiPoly(0), window, "(0,0) vs laurent"));
  }
  return rep;
}

} // namespace knfam
