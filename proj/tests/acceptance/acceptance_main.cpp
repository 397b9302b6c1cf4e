/* Acceptance gate: one pass/fail line per criterion, nonzero exit if any
   criterion fails.  Each criterion is an exact symbolic identity (zero
   residual); wall-clock budgets are enforced per criterion. */

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "knfam/central_extensions.hpp"
#include "knfam/cocycle_calculus.hpp"
#include "knfam/current_algebras.hpp"
#include "knfam/function_algebras.hpp"
#include "knfam/lie_core.hpp"
#include "knfam/table_io.hpp"
#include "knfam/weierstrass_series.hpp"

using namespace knfam;

namespace {

/* Always-on requirement: never compiled out in Release. */
struct CriterionFailure {
  std::string message;
};

#define ENSURE(cond, msg)                                                    \
  do {                                                                       \
    if (!(cond)) {                                                           \
      std::ostringstream os_;                                                \
      os_ << __FILE__ << ":" << __LINE__ << " " << msg;                      \
      throw CriterionFailure{os_.str()};                                     \
    }                                                                        \
  } while (0)

#define ENSURE_REPORT(rep)                                                   \
  do {                                                                       \
    const Report r_ = (rep);                                                 \
    ENSURE(r_.pass, "witness: " << r_.witness);                              \
  } while (0)

int g_failures = 0;

void run_criterion(int num, const std::string &name, double budget_s,
                   const std::function<void()> &body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string failure;
  try {
    body();
  } catch (const CriterionFailure &f) {
    failure = f.message;
  } catch (const std::exception &e) {
    failure = std::string("unexpected exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (failure.empty() && elapsed > budget_s) {
    std::ostringstream os;
    os << "budget exceeded: " << std::fixed << std::setprecision(1) << elapsed
       << "s > " << budget_s << "s";
    failure = os.str();
  }
  std::cout << "criterion " << std::setw(2) << std::setfill('0') << num
            << std::setfill(' ') << " " << name << ": "
            << (failure.empty() ? "PASS" : "FAIL") << " (" << std::fixed
            << std::setprecision(1) << elapsed << "s)";
  if (!failure.empty()) {
    std::cout << "\n  " << failure;
    ++g_failures;
  }
  std::cout << std::endl;
}

std::vector<FamilySpec> all_specs() {
  return {FamilySpec::elliptic(),    FamilySpec::line_s(),
          FamilySpec::line_infinity(), FamilySpec::three_point(),
          FamilySpec::subalgebra_w(), FamilySpec::laurent()};
}

const MultiPoly kE1 = MultiPoly::var(ParamId::e1);
const MultiPoly kE2 = MultiPoly::var(ParamId::e2);
const MultiPoly kA2Coeff = MultiPoly(3) * kE1;
const MultiPoly kA4Coeff = (kE1 - kE2) * (MultiPoly(2) * kE1 + kE2);

/* ------------------------------------------------------------------ */

void criterion_structure_oracle() {
  const int N = 6, order = 2 * N + 8;
  for (int n = -N; n <= N; ++n)
    for (int m = -N; m <= N; ++m)
      ENSURE_REPORT(oracle_check_structure(n, m, order));
}

void criterion_associativity() {
  for (const FamilySpec &spec : all_specs())
    ENSURE_REPORT(verify_associativity(spec, 6));
}

void criterion_jacobi() {
  for (const FamilySpec &spec : all_specs())
    ENSURE_REPORT(verify_jacobi(CurrentFamily{sl2_standard(), spec}, 4));
}

void criterion_gamma_triple_agreement() {
  const int N = 10, order = 2 * N + 8;
  const GammaTable T = gamma_recursion(kA2Coeff, kA4Coeff, N);
  for (int n = -N; n <= N; ++n)
    for (int m = -N; m <= N; ++m) {
      const GammaValue closed = gamma_closed_form(n, m);
      const GammaValue res = gamma_residue_oracle(n, m, order);
      const GammaValue rec = T.at({n, m});
      ENSURE(closed == res, "gamma(" << n << "," << m
                                     << "): closed form " << poly_to_string(closed)
                                     << " != residue oracle "
                                     << poly_to_string(res));
      ENSURE(closed == rec, "gamma(" << n << "," << m
                                     << "): closed form " << poly_to_string(closed)
                                     << " != recursion " << poly_to_string(rec));
    }
  /* anchors: gamma(A_n, A_-n) = -n out to |n| = 20, on both routes */
  const GammaTable T20 = gamma_recursion(kA2Coeff, kA4Coeff, 20);
  for (int n = -20; n <= 20; ++n) {
    ENSURE(gamma_closed_form(n, -n) == MultiPoly(-n),
           "anchor gamma(A_" << n << ", A_" << -n << ") != " << -n);
    ENSURE(T20.at({n, -n}) == MultiPoly(-n),
           "recursion anchor gamma(A_" << n << ", A_" << -n << ") != " << -n);
  }
}

void criterion_gamma_properties() {
  ENSURE_REPORT(verify_gamma_properties(6));
}

void criterion_coboundary_trivial() {
  const CurrentFamily L0{sl2_standard(), FamilySpec::laurent()};
  const AdjCochain2 w1 = deformation_differential(
      CurrentFamily{sl2_standard(), FamilySpec::line_s()});
  const AdjCochain2 w2 = deformation_differential(
      CurrentFamily{sl2_standard(), FamilySpec::line_infinity()});
  const LinMap1 eta1 = LinMap1::odd_shift(MultiPoly(Rational(-3, 2)), -2);
  const LinMap1 eta2 = LinMap1::odd_shift(MultiPoly(Rational(1, 2)), -4);
  ENSURE_REPORT(verify_coboundary(L0, w1, eta1, 8));
  ENSURE_REPORT(verify_coboundary(L0, w2, eta2, 8));
  ENSURE_REPORT(verify_d2_closed(L0, w1, 4));
  ENSURE_REPORT(verify_d2_closed(L0, w2, 4));
}

void criterion_harrison_trivial() {
  const HarrisonCochain2 F =
      deformation_harrison_cochain(FamilySpec::line_s());
  const LinMap1 phi = LinMap1::odd_shift(MultiPoly(Rational(1, 2)), -2);
  ENSURE_REPORT(
      verify_harrison(FamilySpec::laurent(), F, phi, MultiPoly(3), 8));
}

void criterion_rescale_isomorphy() {
  ENSURE_REPORT(rescale_check(FamilySpec::line_s(), 8));
  ENSURE_REPORT(rescale_check(FamilySpec::line_infinity(), 8));
}

void criterion_degenerations() {
  ENSURE_REPORT(degeneration_identifications(8));
  /* singular cocycle tables arise from the recursion with the degenerate
     coefficient pairs */
  const MultiPoly alpha2 = MultiPoly::var(ParamId::alpha, 2);
  const MultiPoly alpha4 = MultiPoly::var(ParamId::alpha, 4);
  const GammaTable T3 = gamma_recursion(alpha2, MultiPoly(0), 6);
  const GammaTable TW = gamma_recursion(MultiPoly(-2) * alpha2, alpha4, 6);
  const GammaTable TL = gamma_recursion(MultiPoly(0), MultiPoly(0), 6);
  for (int n = -6; n <= 6; ++n)
    for (int m = -6; m <= 6; ++m) {
      ENSURE(T3.at({n, m}) == gamma_singular(SingularCase::ThreePoint, n, m),
             "three-point cocycle mismatch at (" << n << "," << m << ")");
      ENSURE(TW.at({n, m}) == gamma_singular(SingularCase::WFamily, n, m),
             "W-family cocycle mismatch at (" << n << "," << m << ")");
      ENSURE(TL.at({n, m}) == gamma_singular(SingularCase::Classical, n, m),
             "classical cocycle mismatch at (" << n << "," << m << ")");
    }
}

void criterion_curve_utilities() {
  ENSURE(j_invariant_at_infinity() == Rational(1728), "j(infinity) != 1728");
  const std::vector<Rational> singular{Rational(1), Rational(-2),
                                       Rational(-1, 2)};
  for (const Rational &s : singular) {
    bool threw = false;
    try {
      (void)j_invariant(s);
    } catch (const SingularLine &) {
      threw = true;
    }
    ENSURE(threw, "j(" << rational_to_string(s)
                       << ") must raise SingularLine");
    /* the discriminant vanishes identically along the singular lines */
    const MultiPoly se1 = MultiPoly(s) * kE1;
    ENSURE(discriminant(kE1, se1, -(kE1 + se1)).is_zero(),
           "discriminant not identically zero at s = "
               << rational_to_string(s));
  }
  for (const Rational &s :
       {Rational(0), Rational(2), Rational(-1), Rational(1, 2)}) {
    bool threw = false;
    try {
      (void)j_invariant(s);
    } catch (const SingularLine &) {
      threw = true;
    }
    ENSURE(!threw, "j(" << rational_to_string(s)
                        << ") raised SingularLine spuriously");
  }
  ENSURE(j_invariant(Rational(0)) == Rational(1728), "j(0) != 1728");
  ENSURE(!discriminant(kE1, MultiPoly(2) * kE1, MultiPoly(-3) * kE1)
              .is_zero(),
         "generic line must not be degenerate");
}

void criterion_mutation_sensitivity() {
  /* (a) uniform corruption of c2 (3e1 -> 4e1): products and closed-form
     cocycle mutate together, so associativity, Jacobi and multiplicativity
     all still hold -- the independent residue route is the check that must
     catch it (suite 4). */
  {
    const FamilySpec mut =
        FamilySpec::custom(MultiPoly(4) * kE1, kA4Coeff, "mutated-c2");
    bool caught = false;
    std::string witness;
    for (int n = -4; n <= 4 && !caught; ++n)
      for (int m = -4; m <= 4 && !caught; ++m) {
        const GammaValue lhs = gamma_for_spec(mut, n, m);
        const GammaValue rhs = gamma_residue_oracle(n, m, 20);
        if (lhs != rhs) {
          caught = true;
          witness = "gamma(" + std::to_string(n) + "," + std::to_string(m) +
                    "): " + poly_to_string(lhs) + " vs residue oracle " +
                    poly_to_string(rhs);
        }
      }
    ENSURE(caught, "c2 mutation not caught by the residue route");
    ENSURE(!witness.empty(), "missing witness");
  }
  /* (b) uniform corruption of c4: same detection channel */
  {
    const FamilySpec mut = FamilySpec::custom(
        kA2Coeff, kA4Coeff + kE1 * kE1, "mutated-c4");
    bool caught = false;
    for (int n = -4; n <= 4 && !caught; ++n)
      for (int m = -4; m <= 4 && !caught; ++m)
        if (gamma_for_spec(mut, n, m) != gamma_residue_oracle(n, m, 20))
          caught = true;
    ENSURE(caught, "c4 mutation not caught by the residue route");
  }
  /* (c) corrupting the cocycle alone (true products, mutated gamma):
     multiplicativity in the property suite (suite 5) must fail */
  {
    const FamilySpec mut =
        FamilySpec::custom(MultiPoly(4) * kE1, kA4Coeff, "mutated-c2");
    const GammaRule bad_rule = [mut](int n, int m) {
      return gamma_for_spec(mut, n, m);
    };
    const Report rep =
        verify_gamma_properties(4, FamilySpec::elliptic(), bad_rule);
    ENSURE(!rep.pass, "gamma-only mutation not caught by the property suite");
    ENSURE(!rep.witness.empty(), "missing witness");
  }
  /* (d) corrupting a single product entry: associativity (suite 2) and
     Jacobi (suite 3) must fail */
  {
    const FamilySpec bad = FamilySpec::elliptic().with_product_override(
        1, 1, {{2, MultiPoly(1)}});
    const Report assoc = verify_associativity(bad, 3);
    ENSURE(!assoc.pass, "product override not caught by associativity");
    ENSURE(!assoc.witness.empty(), "missing witness");
    const Report jac = verify_jacobi(CurrentFamily{sl2_standard(), bad}, 3);
    ENSURE(!jac.pass, "product override not caught by Jacobi");
  }
}

} // namespace

int main() {
  std::cout << "acceptance gate: exact symbolic checks, per-criterion wall "
               "budgets\n";
  run_criterion(1, "structure-oracle", 30, criterion_structure_oracle);
  run_criterion(2, "associativity", 30, criterion_associativity);
  run_criterion(3, "jacobi", 60, criterion_jacobi);
  run_criterion(4, "gamma-triple-agreement", 120,
                criterion_gamma_triple_agreement);
  run_criterion(5, "gamma-properties", 60, criterion_gamma_properties);
  run_criterion(6, "coboundary-trivial", 10, criterion_coboundary_trivial);
  run_criterion(7, "harrison-trivial", 10, criterion_harrison_trivial);
  run_criterion(8, "rescale-isomorphy", 10, criterion_rescale_isomorphy);
  run_criterion(9, "degenerations", 10, criterion_degenerations);
  run_criterion(10, "curve-utilities", 1, criterion_curve_utilities);
  run_criterion(11, "mutation-sensitivity", 60,
                criterion_mutation_sensitivity);
  if (g_failures) {
    std::cout << "acceptance: " << (11 - g_failures) << "/11 criteria passed"
              << std::endl;
    return 1;
  }
  std::cout << "acceptance: 11/11 criteria passed" << std::endl;
  return 0;
}
