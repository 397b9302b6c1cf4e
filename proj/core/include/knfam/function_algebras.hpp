#ifndef KNFAM_FUNCTION_ALGEBRAS_HPP
#define KNFAM_FUNCTION_ALGEBRAS_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "knfam/exact_arith.hpp"
#include "knfam/report.hpp"

namespace knfam {

/* The commutative associative families on the basis {A_n : n in Z}.  Every
   family in scope multiplies as

     A_n * A_m = A_{n+m}                                   (n or m even)
     A_n * A_m = A_{n+m} + c2 A_{n+m-2} + c4 A_{n+m-4}     (n, m both odd)

   and the kinds differ only in the coefficient pair (c2, c4):

     Elliptic      c2 = 3 e1             c4 = (e1-e2)(2 e1+e2)
     LineS         c2 = 3 e              c4 = e^2 (1-s)(2+s)
     LineInfinity  c2 = 0                c4 = -e
     ThreePoint    c2 = alpha^2          c4 = 0
     SubalgebraW   c2 = -2 alpha^2       c4 = alpha^4
     Laurent       c2 = 0                c4 = 0                            */
enum class FamilyKind {
  Elliptic,
  LineS,
  LineInfinity,
  ThreePoint,
  SubalgebraW,
  Laurent,
  Custom
};

class FamilySpec {
public:
  static FamilySpec elliptic();
  static FamilySpec line_s();
  static FamilySpec line_infinity();
  static FamilySpec three_point();
  static FamilySpec subalgebra_w();
  static FamilySpec laurent();
  /* The LineInfinity rule at parameter value e = value, i.e. (c2, c4) =
     (0, -value).  Specialization lands here whenever c2 vanishes but c4
     does not; e.g. Elliptic with e1 -> 0 gives value = e2^2. */
  static FamilySpec line_infinity_at(const MultiPoly &value);
  /* Arbitrary coefficient pair; used by specialization and by the
     mutation-sensitivity tests. */
  static FamilySpec custom(MultiPoly c2, MultiPoly c4,
                           std::string name = "custom");

  FamilyKind kind() const { return m_kind; }
  const std::string &name() const { return m_name; }
  const MultiPoly &c2() const { return m_c2; }
  const MultiPoly &c4() const { return m_c4; }

  /* Testing hook: override the product of one basis pair (applied
     symmetrically).  Returns a copy; the override corrupts multiply() for
     exactly that pair, which the verification suites must detect. */
  FamilySpec with_product_override(int n, int m,
                                   std::map<int, MultiPoly> product) const;
  const std::map<int, MultiPoly> *product_override(int n, int m) const;

  bool operator==(const FamilySpec &o) const {
    return m_kind == o.m_kind && m_c2 == o.m_c2 && m_c4 == o.m_c4;
  }

private:
  FamilySpec(FamilyKind kind, std::string name, MultiPoly c2, MultiPoly c4)
      : m_kind(kind), m_name(std::move(name)), m_c2(std::move(c2)),
        m_c4(std::move(c4)) {}

  FamilyKind m_kind;
  std::string m_name;
  MultiPoly m_c2, m_c4;
  std::shared_ptr<const std::map<std::pair<int, int>, std::map<int, MultiPoly>>>
      m_overrides;
};

/* Parse a family name as used by the CLI: elliptic | lines | lineinf |
   threepoint | w | laurent. */
FamilySpec family_from_name(const std::string &name);

/* Element of the function algebra: finite map degree -> coefficient. */
class FnElement {
public:
  FnElement() = default;
  static FnElement basis(int n, MultiPoly coeff = MultiPoly(1));

  bool is_zero() const { return m_terms.empty(); }
  const std::map<int, MultiPoly> &terms() const { return m_terms; }
  void add(int n, const MultiPoly &c);

  bool operator==(const FnElement &o) const { return m_terms == o.m_terms; }
  bool operator!=(const FnElement &o) const { return !(*this == o); }

  FnElement &operator+=(const FnElement &o);
  FnElement &operator-=(const FnElement &o);
  friend FnElement operator+(FnElement f, const FnElement &g) { return f += g; }
  friend FnElement operator-(FnElement f, const FnElement &g) { return f -= g; }
  FnElement scaled(const MultiPoly &c) const;

private:
  std::map<int, MultiPoly> m_terms;
};

std::string fn_to_string(const FnElement &f);

/* Bilinear extension of the family's basis product rule. */
FnElement multiply(const FamilySpec &spec, const FnElement &f,
                   const FnElement &g);

/* Product of two basis elements A_n * A_m. */
FnElement basis_product(const FamilySpec &spec, int n, int m);

/* (A_n A_m) A_k = A_n (A_m A_k) for all n,m,k in [-N,N], symbolically. */
Report verify_associativity(const FamilySpec &spec, int window);

/* Tightest (R,S) with support(A_n A_m) inside [n+m+R, n+m+S] over the
   window. */
std::pair<int, int> grading_bounds_check(const FamilySpec &spec, int window);

/* Push-out: substitute parameters in the structure constants and re-identify
   the family kind.  Supported transitions from Elliptic: {e2 -> s*e1,
   e1 -> e} to LineS, {e1 -> 0} to LineInfinity (e := e2^2), {e1 -> 0,
   e2 -> 0} to Laurent, and numeric bindings.  Binding a parameter the kind
   does not use raises InconsistentBinding. */
FamilySpec specialize_family(const FamilySpec &spec, const SubstMap &bindings);

/* Rescaling isomorphy onto the e = 1 fiber: under A_n -> t^-n A_n with
   e = t^2 (LineS) or e = t^4 (LineInfinity), checks that the starred
   structure constants are exactly the e = 1 constants — coefficientwise,
   c_j(e -> t^k) == t^(n+m-j) * c_j(e -> 1) for every product in the
   window. */
Report rescale_check(const FamilySpec &spec, int window);

/* Independent series oracle: multiplies basis_series(n) and basis_series(m),
   greedily re-expresses the product in the basis by subtracting
   coefficient * basis_series(j) at the lowest surviving exponent, and
   compares the extracted coefficients with the elliptic closed-form rule. */
Report oracle_check_structure(int n, int m, int order);

/* j(s) = 1728 * 4 (1+s+s^2)^3 / ((1-s)^2 (2+s)^2 (1+2s)^2);
   SingularLine for s in {1, -2, -1/2}. */
Rational j_invariant(const Rational &s);
/* The limit point s = infinity of the pencil; j = 1728. */
Rational j_invariant_at_infinity();

/* Discriminant 16 (e1-e2)^2 (e1-e3)^2 (e2-e3)^2; NotOnCurve unless
   e1+e2+e3 = 0.  Polynomial and rational-point overloads. */
MultiPoly discriminant(const MultiPoly &e1, const MultiPoly &e2,
                       const MultiPoly &e3);
Rational discriminant(const Rational &e1, const Rational &e2,
                      const Rational &e3);

} // namespace knfam

#endif
