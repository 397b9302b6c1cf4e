#include "doctest.h"

#include "knfam/central_extensions.hpp"

using namespace knfam;

namespace {
MultiPoly v(ParamId id, int exp = 1) { return MultiPoly::var(id, exp); }
const MultiPoly e1 = v(ParamId::e1);
const MultiPoly e2 = v(ParamId::e2);
constexpr int H = 0, E = 1, F = 2;
} // namespace

TEST_CASE("closed-form cocycle anchors") {
  /* gamma(A_n, A_-n) = -n, in particular gamma(A_2, A_-2) = -2 */
  for (int n = -8; n <= 8; ++n)
    CHECK(gamma_closed_form(n, -n) == MultiPoly(-n));

  /* level-2 and level-4 values on odd pairs */
  CHECK(gamma_closed_form(3, -1) == MultiPoly(-6) * e1);
  CHECK(gamma_closed_form(-1, 3) == MultiPoly(6) * e1);
  CHECK(gamma_closed_form(1, 1).is_zero()); /* factor (-n+1) kills it */
  CHECK(gamma_closed_form(1, 3) == (e1 - e2) * (MultiPoly(2) * e1 + e2));
  CHECK(gamma_closed_form(3, 1) == -((e1 - e2) * (MultiPoly(2) * e1 + e2)));

  /* even/even away from level 0, and mixed parity, vanish */
  CHECK(gamma_closed_form(4, -2).is_zero());
  CHECK(gamma_closed_form(2, 1).is_zero());
  CHECK(gamma_closed_form(2, 2).is_zero());
  /* locality: nothing below level 0 or above level 4 */
  CHECK(gamma_closed_form(-3, 1).is_zero());
  CHECK(gamma_closed_form(5, 1).is_zero());
}

TEST_CASE("residue route agrees with the closed form") {
  for (const auto &[n, m] : std::initializer_list<std::pair<int, int>>{
           {1, -1}, {2, -2}, {3, -1}, {1, 3}, {3, 1}, {5, -3}, {-5, 5},
           {4, -4}, {2, 3}, {-3, 7}}) {
    INFO("pair (", n, ",", m, ")");
    CHECK(gamma_residue_oracle(n, m, 24) == gamma_closed_form(n, m));
  }
}

TEST_CASE("recursion route rebuilds the table from first principles") {
  SUBCASE("elliptic coefficients reproduce the closed form") {
    const MultiPoly a = MultiPoly(3) * e1;
    const MultiPoly b = (e1 - e2) * (MultiPoly(2) * e1 + e2);
    const GammaTable T = gamma_recursion(a, b, 5);
    for (int n = -5; n <= 5; ++n)
      for (int m = -5; m <= 5; ++m) {
        INFO("pair (", n, ",", m, ")");
        CHECK(T.at({n, m}) == gamma_closed_form(n, m));
      }
  }
  SUBCASE("generic symbolic coefficients match gamma_for_spec") {
    const MultiPoly a = v(ParamId::a), b = v(ParamId::b);
    const FamilySpec generic = FamilySpec::custom(a, b, "generic");
    const GammaTable T = gamma_recursion(a, b, 4);
    for (int n = -4; n <= 4; ++n)
      for (int m = -4; m <= 4; ++m)
        CHECK(T.at({n, m}) == gamma_for_spec(generic, n, m));
  }
  SUBCASE("a doctored table cell is caught by the consistency sweep") {
    const MultiPoly a = v(ParamId::a), b = v(ParamId::b);
    GammaTable T = gamma_recursion(a, b, 4);
    T[{2, -2}] = MultiPoly(-3); /* corrupt the normalization cell */
    CHECK_THROWS_AS(check_gamma_table(T, a, b, 2), RecursionInconsistent);
  }
}

TEST_CASE("cocycle tables of the singular fibers") {
  /* classical = Laurent: only the level-0 diagonal */
  for (int n = -4; n <= 4; ++n)
    for (int m = -4; m <= 4; ++m) {
      CHECK(gamma_singular(SingularCase::Classical, n, m) ==
            gamma_for_spec(FamilySpec::laurent(), n, m));
      CHECK(gamma_singular(SingularCase::ThreePoint, n, m) ==
            gamma_for_spec(FamilySpec::three_point(), n, m));
      CHECK(gamma_singular(SingularCase::WFamily, n, m) ==
            gamma_for_spec(FamilySpec::subalgebra_w(), n, m));
    }
  CHECK(gamma_singular(SingularCase::Classical, 3, -3) == MultiPoly(-3));
  CHECK(gamma_singular(SingularCase::Classical, 3, -1).is_zero());
  CHECK(gamma_singular(SingularCase::ThreePoint, 3, -1) ==
        MultiPoly(-2) * v(ParamId::alpha, 2));
  CHECK(gamma_singular(SingularCase::ThreePoint, 3, 1).is_zero());
  CHECK(gamma_singular(SingularCase::WFamily, 3, -1) ==
        MultiPoly(4) * v(ParamId::alpha, 2));
  CHECK(gamma_singular(SingularCase::WFamily, 3, 1) == -v(ParamId::alpha, 4));

  /* each singular table also arises from the recursion with its (a,b) */
  const MultiPoly alpha2 = v(ParamId::alpha, 2);
  const GammaTable T3 = gamma_recursion(alpha2, MultiPoly(0), 3);
  const GammaTable TW =
      gamma_recursion(MultiPoly(-2) * alpha2, v(ParamId::alpha, 4), 3);
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) {
      CHECK(T3.at({n, m}) == gamma_singular(SingularCase::ThreePoint, n, m));
      CHECK(TW.at({n, m}) == gamma_singular(SingularCase::WFamily, n, m));
    }
}

TEST_CASE("extended bracket realizes the central extension") {
  const CurrentFamily L{sl2_standard(), FamilySpec::laurent()};
  const BilinearForm K = killing_form(L.lie);
  const MultiPoly one(1);

  SUBCASE("level-0 pairs produce the central term") {
    /* [e (x) A_3, f (x) A_-3] = h (x) A_0 + kappa(e,f) gamma(3,-3) t */
    const ExtendedElement u{CurrentElement::basis(E, 3)};
    const ExtendedElement w{CurrentElement::basis(F, -3)};
    const ExtendedElement br = extended_bracket(L, K, one, u, w);
    CurrentElement current;
    current.add(H, 0, MultiPoly(1));
    CHECK(br.current == current);
    CHECK(br.central == MultiPoly(4 * -3)); /* kappa(e,f) = 4, gamma = -3 */
  }
  SUBCASE("off-level pairs have no central term") {
    const ExtendedElement u{CurrentElement::basis(E, 2)};
    const ExtendedElement w{CurrentElement::basis(F, 3)};
    const ExtendedElement br = extended_bracket(L, K, one, u, w);
    CurrentElement current;
    current.add(H, 5, MultiPoly(1));
    CHECK(br.current == current);
    CHECK(br.central.is_zero());
  }
  SUBCASE("the central generator is central") {
    const ExtendedElement t = ExtendedElement::central_t(MultiPoly(1));
    const ExtendedElement u{CurrentElement::basis(E, 3)};
    CHECK(extended_bracket(L, K, one, t, u).is_zero());
    CHECK(extended_bracket(L, K, one, u, t).is_zero());
    CHECK(extended_bracket(L, K, one, t, t).is_zero());
  }
  SUBCASE("the scaling polynomial multiplies the central term") {
    const MultiPoly p = v(ParamId::a) + v(ParamId::b) * e1;
    const ExtendedElement u{CurrentElement::basis(E, 1)};
    const ExtendedElement w{CurrentElement::basis(F, -1)};
    const ExtendedElement br = extended_bracket(L, K, p, u, w);
    CHECK(br.central == p * MultiPoly(-4));
  }
  SUBCASE("non-invariant forms are rejected") {
    BilinearForm I;
    I.matrix = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const ExtendedElement u{CurrentElement::basis(E, 1)};
    const ExtendedElement w{CurrentElement::basis(F, -1)};
    CHECK_THROWS_AS(extended_bracket(L, I, one, u, w), NonInvariantForm);
  }
}

TEST_CASE("the cocycle property suite passes for the smooth family") {
  const Report rep = verify_gamma_properties(3);
  INFO(rep.witness);
  CHECK(rep.pass);
  CHECK(rep.checked > 0);
}

TEST_CASE("the property suite flags a corrupted cocycle") {
  /* keep the true elliptic products but dent one antisymmetric pair of
     cocycle values: multiplicativity must break */
  const GammaRule dented = [](int n, int m) -> GammaValue {
    if (n == 1 && m == -1) return MultiPoly(-2);
    if (n == -1 && m == 1) return MultiPoly(2);
    return gamma_closed_form(n, m);
  };
  const Report rep =
      verify_gamma_properties(3, FamilySpec::elliptic(), dented);
  CHECK(!rep.pass);
  CHECK(!rep.witness.empty());
}
