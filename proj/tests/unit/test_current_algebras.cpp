#include "doctest.h"

#include "knfam/current_algebras.hpp"

using namespace knfam;

namespace {
MultiPoly v(ParamId id, int exp = 1) { return MultiPoly::var(id, exp); }
/* sl2 basis indices */
constexpr int H = 0, E = 1, F = 2;
} // namespace

TEST_CASE("current bracket pairs the Lie bracket with the function product") {
  const CurrentFamily L{sl2_standard(), FamilySpec::line_s()};
  const MultiPoly e = v(ParamId::e), s = v(ParamId::s);

  /* [e (x) A_1, f (x) A_1] = h (x) (A_2 + 3e A_0 + e^2 (1-s)(2+s) A_-2) */
  const CurrentElement br = current_bracket(L, CurrentElement::basis(E, 1),
                                            CurrentElement::basis(F, 1));
  CurrentElement want;
  want.add(H, 2, MultiPoly(1));
  want.add(H, 0, MultiPoly(3) * e);
  want.add(H, -2, e * e * (MultiPoly(1) - s) * (MultiPoly(2) + s));
  CHECK(br == want);

  /* [h (x) A_2, e (x) A_3] = 2 e (x) A_5 (an even degree: single term) */
  CurrentElement want2;
  want2.add(E, 5, MultiPoly(2));
  CHECK(current_bracket(L, CurrentElement::basis(H, 2),
                        CurrentElement::basis(E, 3)) == want2);

  /* [x, x] = 0 and antisymmetry on a composite element */
  CurrentElement u = CurrentElement::basis(E, 1, MultiPoly(2));
  u.add(H, -2, e);
  CurrentElement w = CurrentElement::basis(F, 3);
  w.add(E, 0, MultiPoly(5));
  CHECK(current_bracket(L, u, u).is_zero());
  CHECK(current_bracket(L, u, w) + current_bracket(L, w, u) ==
        CurrentElement());
}

TEST_CASE("current families validate their Lie algebra at construction") {
  FiniteLieAlgebra bad = FiniteLieAlgebra::zero(2);
  bad.set(0, 1, 0, Rational(1)); /* [T1,T2] = T1 without the mirror */
  CHECK_THROWS_AS(CurrentFamily(bad, FamilySpec::laurent()),
                  InvalidStructureConstants);
}

TEST_CASE("Jacobi identity holds on small windows") {
  CHECK(verify_jacobi(CurrentFamily{sl2_standard(), FamilySpec::elliptic()}, 2)
            .pass);
  CHECK(verify_jacobi(CurrentFamily{sl2_standard(), FamilySpec::laurent()}, 3)
            .pass);
}

TEST_CASE("Jacobi verification detects corrupted products") {
  const FamilySpec bad =
      FamilySpec::elliptic().with_product_override(1, 1, {{2, MultiPoly(1)}});
  const Report rep =
      verify_jacobi(CurrentFamily{sl2_standard(), bad}, 3);
  CHECK(!rep.pass);
  CHECK(!rep.witness.empty());
}

TEST_CASE("degeneration identifications of the singular fibers") {
  const Report rep = degeneration_identifications(4);
  INFO(rep.witness);
  CHECK(rep.pass);
  CHECK(rep.checked > 0);
}

TEST_CASE("element printing uses Lie basis names") {
  const CurrentFamily L{sl2_standard(), FamilySpec::laurent()};
  CurrentElement u = CurrentElement::basis(H, -1);
  u.add(E, 3, MultiPoly(2));
  const std::string text = current_to_string(L, u);
  CHECK(text.find('h') != std::string::npos);
  CHECK(text.find('e') != std::string::npos);
  CHECK(!current_to_string(L, CurrentElement()).empty()); /* prints "0" */
}
