#include "doctest.h"

#include "knfam/function_algebras.hpp"

using namespace knfam;

namespace {
MultiPoly v(ParamId id, int exp = 1) { return MultiPoly::var(id, exp); }
const MultiPoly e1 = v(ParamId::e1);
const MultiPoly e2 = v(ParamId::e2);
} // namespace

TEST_CASE("the six family kinds carry the documented coefficient pairs") {
  CHECK(FamilySpec::elliptic().c2() == MultiPoly(3) * e1);
  CHECK(FamilySpec::elliptic().c4() ==
        (e1 - e2) * (MultiPoly(2) * e1 + e2));
  CHECK(FamilySpec::line_s().c2() == MultiPoly(3) * v(ParamId::e));
  CHECK(FamilySpec::line_s().c4() ==
        v(ParamId::e, 2) * (MultiPoly(1) - v(ParamId::s)) *
            (MultiPoly(2) + v(ParamId::s)));
  CHECK(FamilySpec::line_infinity().c2().is_zero());
  CHECK(FamilySpec::line_infinity().c4() == -v(ParamId::e));
  CHECK(FamilySpec::three_point().c2() == v(ParamId::alpha, 2));
  CHECK(FamilySpec::three_point().c4().is_zero());
  CHECK(FamilySpec::subalgebra_w().c2() ==
        MultiPoly(-2) * v(ParamId::alpha, 2));
  CHECK(FamilySpec::subalgebra_w().c4() == v(ParamId::alpha, 4));
  CHECK(FamilySpec::laurent().c2().is_zero());
  CHECK(FamilySpec::laurent().c4().is_zero());
}

TEST_CASE("product rule on basis elements") {
  const FamilySpec E = FamilySpec::elliptic();

  /* odd * odd picks up the two correction terms */
  const FnElement p11 = basis_product(E, 1, 1);
  FnElement want;
  want.add(2, MultiPoly(1));
  want.add(0, MultiPoly(3) * e1);
  want.add(-2, (e1 - e2) * (MultiPoly(2) * e1 + e2));
  CHECK(p11 == want);

  /* anything involving an even degree is a single term */
  FnElement single;
  single.add(5, MultiPoly(1));
  CHECK(basis_product(E, 2, 3) == single);
  CHECK(basis_product(E, 3, 2) == single);
  FnElement a0;
  a0.add(0, MultiPoly(1));
  CHECK(basis_product(E, 2, -2) == a0);

  /* the Laurent family multiplies like Laurent polynomials */
  FnElement l2;
  l2.add(2, MultiPoly(1));
  CHECK(basis_product(FamilySpec::laurent(), 1, 1) == l2);

  /* bilinear extension */
  FnElement f = FnElement::basis(1, MultiPoly(2));
  f.add(0, e1);
  const FnElement sq = multiply(E, f, f);
  /* (2A_1 + e1 A_0)^2 = 4A_1^2 + 4e1 A_1 + e1^2 A_0 */
  FnElement want2;
  want2.add(2, MultiPoly(4));
  want2.add(0, MultiPoly(12) * e1);
  want2.add(-2, MultiPoly(4) * (e1 - e2) * (MultiPoly(2) * e1 + e2));
  want2.add(1, MultiPoly(4) * e1);
  want2.add(0, e1 * e1);
  CHECK(sq == want2);
}

TEST_CASE("associativity holds for every kind on a small window") {
  for (const FamilySpec &spec :
       {FamilySpec::elliptic(), FamilySpec::line_s(),
        FamilySpec::line_infinity(), FamilySpec::three_point(),
        FamilySpec::subalgebra_w(), FamilySpec::laurent()}) {
    const Report rep = verify_associativity(spec, 3);
    CHECK(rep.pass);
    CHECK(rep.checked > 0);
    INFO(spec.name(), ": ", rep.witness);
  }
}

TEST_CASE("a corrupted product table breaks associativity with a witness") {
  FnElement fake;
  fake.add(2, MultiPoly(1)); /* drop the two correction terms of A_1 A_1 */
  const FamilySpec bad =
      FamilySpec::elliptic().with_product_override(1, 1, {{2, MultiPoly(1)}});
  CHECK(basis_product(bad, 1, 1) == fake);
  const Report rep = verify_associativity(bad, 3);
  CHECK(!rep.pass);
  CHECK(!rep.witness.empty());
}

TEST_CASE("grading bounds per kind") {
  CHECK(grading_bounds_check(FamilySpec::elliptic(), 4) ==
        std::pair<int, int>(-4, 0));
  CHECK(grading_bounds_check(FamilySpec::line_s(), 4) ==
        std::pair<int, int>(-4, 0));
  CHECK(grading_bounds_check(FamilySpec::line_infinity(), 4) ==
        std::pair<int, int>(-4, 0));
  CHECK(grading_bounds_check(FamilySpec::three_point(), 4) ==
        std::pair<int, int>(-2, 0));
  CHECK(grading_bounds_check(FamilySpec::subalgebra_w(), 4) ==
        std::pair<int, int>(-4, 0));
  CHECK(grading_bounds_check(FamilySpec::laurent(), 4) ==
        std::pair<int, int>(0, 0));
}

TEST_CASE("specialization transitions between kinds") {
  const FamilySpec E = FamilySpec::elliptic();

  SUBCASE("restrict to a line, then rename: e2 -> s e1, e1 -> e") {
    SubstMap b{{ParamId::e2, v(ParamId::s) * e1}, {ParamId::e1, v(ParamId::e)}};
    const FamilySpec f = specialize_family(E, b);
    CHECK(f.kind() == FamilyKind::LineS);
    CHECK(f == FamilySpec::line_s());
  }
  SUBCASE("e1 -> 0 lands on the line through infinity with e = e2^2") {
    const FamilySpec f = specialize_family(E, {{ParamId::e1, MultiPoly(0)}});
    CHECK(f.kind() == FamilyKind::LineInfinity);
    CHECK(f.c2().is_zero());
    CHECK(f.c4() == -(e2 * e2));
    /* and from there e2 -> 0 reaches the Laurent fiber */
    const FamilySpec g = specialize_family(f, {{ParamId::e2, MultiPoly(0)}});
    CHECK(g.kind() == FamilyKind::Laurent);
  }
  SUBCASE("both branch points to zero is the Laurent fiber") {
    const FamilySpec f = specialize_family(
        E, {{ParamId::e1, MultiPoly(0)}, {ParamId::e2, MultiPoly(0)}});
    CHECK(f.kind() == FamilyKind::Laurent);
  }
  SUBCASE("numeric fibers of the s-line stay custom unless they match") {
    const FamilySpec f =
        specialize_family(FamilySpec::line_s(), {{ParamId::s, MultiPoly(1)}});
    CHECK(f.kind() == FamilyKind::Custom);
    CHECK(f.c2() == MultiPoly(3) * v(ParamId::e));
    CHECK(f.c4().is_zero());
  }
  SUBCASE("binding a parameter the kind does not carry is an error") {
    CHECK_THROWS_AS(
        specialize_family(E, {{ParamId::alpha, MultiPoly(1)}}),
        InconsistentBinding);
    CHECK_THROWS_AS(
        specialize_family(FamilySpec::laurent(), {{ParamId::e, MultiPoly(1)}}),
        InconsistentBinding);
  }
  SUBCASE("cyclic bindings are rejected") {
    CHECK_THROWS_AS(
        specialize_family(E, {{ParamId::e1, e2}, {ParamId::e2, e1}}),
        InconsistentBinding);
  }
  SUBCASE("specialization commutes with multiply") {
    SubstMap b{{ParamId::e1, MultiPoly(2)}, {ParamId::e2, MultiPoly(-1)}};
    const FamilySpec f = specialize_family(E, b);
    for (int n = -2; n <= 2; ++n)
      for (int m = -2; m <= 2; ++m) {
        const FnElement lhs = basis_product(f, n, m);
        const FnElement base = basis_product(E, n, m);
        FnElement rhs;
        for (const auto &[j, c] : base.terms())
          rhs.add(j, poly_substitute(c, b));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("rescaling onto the unit fiber eliminates t") {
  CHECK(rescale_check(FamilySpec::line_s(), 4).pass);
  CHECK(rescale_check(FamilySpec::line_infinity(), 4).pass);
  const Report triv = rescale_check(FamilySpec::laurent(), 4);
  CHECK(triv.pass);
  CHECK_THROWS_AS(rescale_check(FamilySpec::elliptic(), 2),
                  InconsistentBinding);
}

TEST_CASE("series oracle confirms the closed-form structure constants") {
  CHECK(oracle_check_structure(1, 1, 12).pass);
  CHECK(oracle_check_structure(2, -2, 12).pass);
  CHECK(oracle_check_structure(3, -1, 14).pass);
  CHECK(oracle_check_structure(-3, -5, 24).pass);
}

TEST_CASE("j-invariant of the pencil") {
  CHECK(j_invariant(Rational(0)) == Rational(1728));
  CHECK(j_invariant(Rational(2)) == Rational(148176, 25));
  CHECK(j_invariant_at_infinity() == Rational(1728));
  CHECK_THROWS_AS(j_invariant(Rational(1)), SingularLine);
  CHECK_THROWS_AS(j_invariant(Rational(-2)), SingularLine);
  CHECK_THROWS_AS(j_invariant(Rational(-1, 2)), SingularLine);
}

TEST_CASE("discriminant of the branch points") {
  CHECK(discriminant(Rational(1), Rational(2), Rational(-3)) ==
        Rational(6400));
  CHECK_THROWS_AS(discriminant(Rational(1), Rational(1), Rational(1)),
                  NotOnCurve);

  /* the singular lines have identically vanishing discriminant */
  for (const Rational s : {Rational(1), Rational(-2), Rational(-1, 2)}) {
    const MultiPoly se1 = MultiPoly(s) * e1;
    const MultiPoly e3 = -(e1 + se1);
    CHECK(discriminant(e1, se1, e3).is_zero());
  }
  /* a generic line is not degenerate */
  CHECK(!discriminant(e1, MultiPoly(2) * e1, MultiPoly(-3) * e1).is_zero());
  CHECK_THROWS_AS(discriminant(e1, e2, e1), NotOnCurve);
}
