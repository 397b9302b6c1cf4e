#include "knfam/function_algebras.hpp"

#include <sstream>

#include "knfam/weierstrass_series.hpp"

namespace knfam {

static MultiPoly var(ParamId id, int exp = 1) { return MultiPoly::var(id, exp); }

FamilySpec FamilySpec::elliptic() {
  MultiPoly e1 = var(ParamId::e1), e2 = var(ParamId::e2);
  return FamilySpec(FamilyKind::Elliptic, "elliptic", MultiPoly(3) * e1,
                    (e1 - e2) * (MultiPoly(2) * e1 + e2));
}

FamilySpec FamilySpec::line_s() {
  MultiPoly e = var(ParamId::e), s = var(ParamId::s);
  return FamilySpec(FamilyKind::LineS, "lines", MultiPoly(3) * e,
                    e * e * (MultiPoly(1) - s) * (MultiPoly(2) + s));
}

FamilySpec FamilySpec::line_infinity() {
  return FamilySpec(FamilyKind::LineInfinity, "lineinf", MultiPoly(0),
                    -var(ParamId::e));
}

FamilySpec FamilySpec::three_point() {
  return FamilySpec(FamilyKind::ThreePoint, "threepoint",
                    var(ParamId::alpha, 2), MultiPoly(0));
}

FamilySpec FamilySpec::subalgebra_w() {
  return FamilySpec(FamilyKind::SubalgebraW, "w",
                    MultiPoly(-2) * var(ParamId::alpha, 2),
                    var(ParamId::alpha, 4));
}

FamilySpec FamilySpec::laurent() {
  return FamilySpec(FamilyKind::Laurent, "laurent", MultiPoly(0), MultiPoly(0));
}

FamilySpec FamilySpec::line_infinity_at(const MultiPoly &value) {
  return FamilySpec(FamilyKind::LineInfinity, "lineinf", MultiPoly(0), -value);
}

FamilySpec FamilySpec::custom(MultiPoly c2, MultiPoly c4, std::string name) {
  return FamilySpec(FamilyKind::Custom, std::move(name), std::move(c2),
                    std::move(c4));
}

FamilySpec FamilySpec::with_product_override(
    int n, int m, std::map<int, MultiPoly> product) const {
  FamilySpec r = *this;
  auto table = m_overrides
                   ? *m_overrides
                   : std::map<std::pair<int, int>, std::map<int, MultiPoly>>{};
  table[{n, m}] = product;
  table[{m, n}] = std::move(product);
  r.m_overrides = std::make_shared<decltype(table)>(std::move(table));
  return r;
}

const std::map<int, MultiPoly> *FamilySpec::product_override(int n,
                                                             int m) const {
  if (!m_overrides)
    return nullptr;
  auto it = m_overrides->find({n, m});
  return it == m_overrides->end() ? nullptr : &it->second;
}

FamilySpec family_from_name(const std::string &name) {
  if (name == "elliptic")
    return FamilySpec::elliptic();
  if (name == "lines")
    return FamilySpec::line_s();
  if (name == "lineinf")
    return FamilySpec::line_infinity();
  if (name == "threepoint")
    return FamilySpec::three_point();
  if (name == "w")
    return FamilySpec::subalgebra_w();
  if (name == "laurent")
    return FamilySpec::laurent();
  throw ParseError("unknown family '" + name +
                   "' (expected elliptic|lines|lineinf|threepoint|w|laurent)");
}

FnElement FnElement::basis(int n, MultiPoly coeff) {
  FnElement f;
  f.add(n, coeff);
  return f;
}

void FnElement::add(int n, const MultiPoly &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = m_terms.emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      m_terms.erase(it);
  }
}

FnElement &FnElement::operator+=(const FnElement &o) {
  for (const auto &[n, c] : o.m_terms)
    add(n, c);
  return *this;
}

FnElement &FnElement::operator-=(const FnElement &o) {
  for (const auto &[n, c] : o.m_terms)
    add(n, -c);
  return *this;
}

FnElement FnElement::scaled(const MultiPoly &c) const {
  FnElement r;
  for (const auto &[n, x] : m_terms)
    r.add(n, x * c);
  return r;
}

std::string fn_to_string(const FnElement &f) {
  if (f.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[n, c] : f.terms()) {
    if (!first)
      os << " + ";
    if (c == MultiPoly(1))
      os << "A[" << n << "]";
    else
      os << "(" << poly_to_string(c) << ")*A[" << n << "]";
    first = false;
  }
  return os.str();
}

FnElement basis_product(const FamilySpec &spec, int n, int m) {
  if (const auto *over = spec.product_override(n, m)) {
    FnElement r;
    for (const auto &[j, c] : *over)
      r.add(j, c);
    return r;
  }
  FnElement r = FnElement::basis(n + m);
  if ((n % 2 != 0) && (m % 2 != 0)) {
    r.add(n + m - 2, spec.c2());
    r.add(n + m - 4, spec.c4());
  }
  return r;
}

FnElement multiply(const FamilySpec &spec, const FnElement &f,
                   const FnElement &g) {
  FnElement r;
  for (const auto &[n, cf] : f.terms())
    for (const auto &[m, cg] : g.terms())
      r += basis_product(spec, n, m).scaled(cf * cg);
  return r;
}

Report verify_associativity(const FamilySpec &spec, int window) {
  Report rep;
  rep.detail = "associativity of " + spec.name() + " on window " +
               std::to_string(window);
  for (int n = -window; n <= window; ++n)
    for (int m = -window; m <= window; ++m)
      for (int k = -window; k <= window; ++k) {
        FnElement lhs =
            multiply(spec, basis_product(spec, n, m), FnElement::basis(k));
        FnElement rhs =
            multiply(spec, FnElement::basis(n), basis_product(spec, m, k));
        ++rep.checked;
        if (lhs != rhs) {
          std::ostringstream os;
          os << "(A[" << n << "]*A[" << m << "])*A[" << k << "] = "
             << fn_to_string(lhs) << "  but  A[" << n << "]*(A[" << m
             << "]*A[" << k << "]) = " << fn_to_string(rhs);
          rep.fail(os.str());
          return rep;
        }
      }
  return rep;
}

std::pair<int, int> grading_bounds_check(const FamilySpec &spec, int window) {
  bool seen = false;
  int R = 0, S = 0;
  for (int n = -window; n <= window; ++n)
    for (int m = -window; m <= window; ++m) {
      FnElement p = basis_product(spec, n, m);
      for (const auto &[j, c] : p.terms()) {
        int off = j - (n + m);
        if (!seen) {
          R = S = off;
          seen = true;
        } else {
          R = std::min(R, off);
          S = std::max(S, off);
        }
      }
    }
  return {R, S};
}

/* Parameters a family kind is allowed to bind.  Besides the kind's own
   parameters, any parameter the structure constants actually carry is fair
   game (a LineInfinity fiber reached as e = e2^2 still binds e2). */
static bool binding_allowed(const FamilySpec &spec, ParamId id) {
  if (spec.c2().depends_on(id) || spec.c4().depends_on(id))
    return true;
  switch (spec.kind()) {
  case FamilyKind::Elliptic:
    return id == ParamId::e1 || id == ParamId::e2;
  case FamilyKind::LineS:
    return id == ParamId::s || id == ParamId::e;
  case FamilyKind::LineInfinity:
    return id == ParamId::e;
  case FamilyKind::ThreePoint:
  case FamilyKind::SubalgebraW:
    return id == ParamId::alpha;
  case FamilyKind::Laurent:
  case FamilyKind::Custom:
    return false;
  }
  return false;
}

/* Substitute to fixpoint so that chained bindings like
   {e2 -> s*e1, e1 -> e} mean "restrict, then rename". */
static MultiPoly substitute_chain(MultiPoly p, const SubstMap &bindings) {
  for (int round = 0; round < 16; ++round) {
    bool bound_param_present = false;
    for (const auto &[id, q] : bindings)
      if (p.depends_on(id)) {
        bound_param_present = true;
        break;
      }
    if (!bound_param_present)
      return p;
    p = poly_substitute(p, bindings);
  }
  throw InconsistentBinding("cyclic parameter bindings");
}

static FamilySpec recognize(const MultiPoly &c2, const MultiPoly &c4,
                            const std::string &parent) {
  const FamilySpec candidates[] = {
      FamilySpec::laurent(),       FamilySpec::elliptic(),
      FamilySpec::line_s(),        FamilySpec::line_infinity(),
      FamilySpec::three_point(),   FamilySpec::subalgebra_w()};
  for (const auto &cand : candidates)
    if (cand.c2() == c2 && cand.c4() == c4)
      return cand;
  /* The LineInfinity rule is the one-parameter shape (0, -e); any pair with
     c2 = 0 and c4 != 0 is that rule at e = -c4.  In particular Elliptic with
     e1 -> 0 gives (0, -e2^2), i.e. e = e2^2. */
  if (c2.is_zero() && !c4.is_zero())
    return FamilySpec::line_infinity_at(-c4);
  return FamilySpec::custom(c2, c4, "specialized(" + parent + ")");
}

FamilySpec specialize_family(const FamilySpec &spec, const SubstMap &bindings) {
  for (const auto &[id, p] : bindings)
    if (!binding_allowed(spec, id))
      throw InconsistentBinding("family '" + spec.name() +
                                "' does not bind parameter " + param_name(id));
  MultiPoly c2 = substitute_chain(spec.c2(), bindings);
  MultiPoly c4 = substitute_chain(spec.c4(), bindings);
  return recognize(c2, c4, spec.name());
}

Report rescale_check(const FamilySpec &spec, int window) {
  Report rep;
  rep.detail = "rescaling isomorphy of " + spec.name() + " on window " +
               std::to_string(window);
  int tpow;
  switch (spec.kind()) {
  case FamilyKind::LineS:
    tpow = 2;
    break;
  case FamilyKind::LineInfinity:
    tpow = 4;
    break;
  case FamilyKind::Laurent:
    /* no parameter e anywhere; the starred constants are trivially t-free */
    rep.checked = 1;
    return rep;
  default:
    throw InconsistentBinding("rescale_check applies to the line families "
                              "(or trivially to laurent), not " + spec.name());
  }
  SubstMap to_t{{ParamId::e, MultiPoly::var(ParamId::t, tpow)}};
  SubstMap to_one{{ParamId::e, MultiPoly(1)}};
  const MultiPoly t = MultiPoly::var(ParamId::t);
  for (int n = -window; n <= window; ++n)
    for (int m = -window; m <= window; ++m) {
      FnElement p = basis_product(spec, n, m);
      for (const auto &[j, c] : p.terms()) {
        /* A*_n A*_m = sum_j t^(n+m-j) c_j A*_j must be t-free once
           e -> t^tpow, i.e. c_j(t^tpow) == t^(n+m-j) c_j(1). */
        MultiPoly lhs = poly_substitute(c, to_t);
        MultiPoly rhs =
            poly_pow(t, n + m - j) * poly_substitute(c, to_one);
        ++rep.checked;
        if (lhs != rhs) {
          std::ostringstream os;
          os << "product A[" << n << "]*A[" << m << "], component A[" << j
             << "]: rescaled coefficient " << poly_to_string(lhs)
             << " != " << poly_to_string(rhs);
          rep.fail(os.str());
          return rep;
        }
      }
    }
  return rep;
}

Report oracle_check_structure(int n, int m, int order) {
  Report rep;
  rep.detail = "series oracle for A[" + std::to_string(n) + "]*A[" +
               std::to_string(m) + "] at order " + std::to_string(order);
  LaurentSeries prod = basis_series(n, order) * basis_series(m, order);

  std::map<int, MultiPoly> extracted;
  for (int step = 0; !prod.is_zero(); ++step) {
    if (step > 200) {
      rep.fail("basis re-expression did not terminate");
      return rep;
    }
    int j = -prod.low;
    MultiPoly lead = prod.coeffs[0];
    MultiPoly cj = (j % 2 != 0) ? -lead : lead; // basis leading coeff is ±1
    extracted[j] = cj;
    prod = prod - series_scale(basis_series(j, prod.trunc), cj);
  }

  FnElement expected = basis_product(FamilySpec::elliptic(), n, m);
  FnElement got;
  for (const auto &[j, c] : extracted)
    got.add(j, c);
  ++rep.checked;
  if (got != expected) {
    rep.fail("A[" + std::to_string(n) + "]*A[" + std::to_string(m) +
             "]: series gives " + fn_to_string(got) + ", rule gives " +
             fn_to_string(expected));
  }
  return rep;
}

static bool is_singular_s(const Rational &s) {
  return s == 1 || s == -2 || s == Rational(-1, 2);
}

Rational j_invariant(const Rational &s) {
  if (is_singular_s(s))
    throw SingularLine("s = " + rational_to_string(s) +
                       " lies on a singular line (nodal cubic)");
  Rational num = Rational(1728) * 4 * (1 + s + s * s) * (1 + s + s * s) *
                 (1 + s + s * s);
  Rational d = (1 - s) * (2 + s) * (1 + 2 * s);
  return num / (d * d);
}

Rational j_invariant_at_infinity() { return Rational(1728); }

MultiPoly discriminant(const MultiPoly &e1, const MultiPoly &e2,
                       const MultiPoly &e3) {
  if (!(e1 + e2 + e3).is_zero())
    throw NotOnCurve("branch points must satisfy e1 + e2 + e3 = 0");
  MultiPoly d12 = e1 - e2, d13 = e1 - e3, d23 = e2 - e3;
  return MultiPoly(16) * d12 * d12 * d13 * d13 * d23 * d23;
}

Rational discriminant(const Rational &e1, const Rational &e2,
                      const Rational &e3) {
  if (e1 + e2 + e3 != 0)
    throw NotOnCurve("branch points must satisfy e1 + e2 + e3 = 0");
  Rational d12 = e1 - e2, d13 = e1 - e3, d23 = e2 - e3;
  return Rational(16) * d12 * d12 * d13 * d13 * d23 * d23;
}

} // namespace knfam
