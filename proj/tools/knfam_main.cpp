/* Command-line front end: structure-constant and cocycle tables,
 * verification suites, and family specialization.
 *
 * Exit codes: 0 all checks pass / table emitted; 2 a mathematical
 * assertion failed; 1 usage or I/O error. */

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "knfam/central_extensions.hpp"
#include "knfam/cocycle_calculus.hpp"
#include "knfam/current_algebras.hpp"
#include "knfam/errors.hpp"
#include "knfam/function_algebras.hpp"
#include "knfam/lie_core.hpp"
#include "knfam/table_io.hpp"
#include "knfam/weierstrass_series.hpp"

using namespace knfam;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMathFail = 2;

struct Options {
  std::string what;
  std::string suite;
  std::string spec_name;
  std::string lie_name = "sl2";
  int window = 6;
  int order = 20;
  std::string format = "csv";
  std::string out_path;
  std::string route = "closed";
  std::string p_text;
  std::string mutate_c2;
  std::string mutate_c4;
  std::string s_text, e_text, e1_text, e2_text, alpha_text;
};

/* a usage problem detected after flag parsing */
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FiniteLieAlgebra load_lie(const std::string &name) {
  if (name == "sl2") return sl2_standard();
  return lie_from_json_file(name);
}

std::vector<FamilySpec> all_specs() {
  return {FamilySpec::elliptic(),      FamilySpec::line_s(),
          FamilySpec::line_infinity(), FamilySpec::three_point(),
          FamilySpec::subalgebra_w(),  FamilySpec::laurent()};
}

TableFormat parse_format(const std::string &f) {
  if (f == "csv") return TableFormat::Csv;
  if (f == "json") return TableFormat::Json;
  throw UsageError("unknown format '" + f + "' (expected csv or json)");
}

FamilySpec parse_spec(const std::string &name, const char *fallback) {
  return family_from_name(name.empty() ? fallback : name.c_str());
}

void require_window(int window) {
  if (window < 1) throw UsageError("--window must be >= 1");
}

void require_residue_order(int window, int order) {
  if (order < 2 * window + 8)
    throw UsageError("--order must be >= 2*window+8 = " +
                     std::to_string(2 * window + 8) +
                     " for the residue route");
}

MultiPoly elliptic_a() { return FamilySpec::elliptic().c2(); }
MultiPoly elliptic_b() { return FamilySpec::elliptic().c4(); }

int emit(const Options &o, const std::string &text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output path '" + o.out_path + "'");
  f << text;
  f.flush();
  if (!f.good())
    throw UsageError("failed writing output path '" + o.out_path + "'");
  return kExitPass;
}

/* ------------------------------------------------------------------ */
/* tables                                                             */
/* ------------------------------------------------------------------ */

int cmd_tables(const Options &o) {
  require_window(o.window);
  const TableFormat fmt = parse_format(o.format);
  if (o.what == "products") {
    const FamilySpec spec = parse_spec(o.spec_name, "elliptic");
    return emit(o, products_table(spec, o.window, fmt));
  }
  if (o.what == "brackets") {
    const FamilySpec spec = parse_spec(o.spec_name, "elliptic");
    const CurrentFamily F{load_lie(o.lie_name), spec};
    return emit(o, brackets_table(F, o.window, fmt));
  }
  if (o.what == "gamma") {
    GammaRoute route;
    if (o.route == "closed")
      route = GammaRoute::Closed;
    else if (o.route == "residue")
      route = GammaRoute::Residue;
    else if (o.route == "recursion")
      route = GammaRoute::Recursion;
    else
      throw UsageError("unknown route '" + o.route +
                       "' (expected closed, residue or recursion)");
    if (route == GammaRoute::Residue) require_residue_order(o.window, o.order);
    return emit(o, gamma_table_text(o.window, route, o.order, fmt));
  }
  throw UsageError("unknown table '" + o.what +
                   "' (expected products, brackets or gamma)");
}

/* ------------------------------------------------------------------ */
/* verify                                                             */
/* ------------------------------------------------------------------ */

int finish_suite(const std::string &suite, const Report &rep) {
  if (rep.pass) {
    std::cout << "suite " << suite << ": PASS (" << rep.checked
              << " checks)\n";
    return kExitPass;
  }
  std::cout << "suite " << suite << ": FAIL\n  witness: " << rep.witness
            << "\n";
  if (!rep.detail.empty()) std::cout << "  detail: " << rep.detail << "\n";
  return kExitMathFail;
}

/* the family the gamma rules are mutated into, when requested */
FamilySpec mutated_spec(const Options &o, const FamilySpec &base) {
  MultiPoly c2 = base.c2(), c4 = base.c4();
  if (!o.mutate_c2.empty()) c2 = poly_parse(o.mutate_c2);
  if (!o.mutate_c4.empty()) c4 = poly_parse(o.mutate_c4);
  return FamilySpec::custom(c2, c4, "mutated(" + base.name() + ")");
}

int suite_associativity(const Options &o) {
  Report rep;
  if (o.spec_name.empty()) {
    for (const FamilySpec &spec : all_specs())
      rep.absorb(verify_associativity(spec, o.window));
  } else {
    rep = verify_associativity(parse_spec(o.spec_name, "elliptic"), o.window);
  }
  return finish_suite("associativity", rep);
}

int suite_jacobi(const Options &o) {
  const FamilySpec spec = parse_spec(o.spec_name, "elliptic");
  const CurrentFamily F{load_lie(o.lie_name), spec};
  return finish_suite("jacobi", verify_jacobi(F, o.window));
}

int suite_gamma_agreement(const Options &o) {
  require_residue_order(o.window, o.order);
  const FamilySpec spec = mutated_spec(o, FamilySpec::elliptic());
  Report rep;
  const GammaTable rec = gamma_recursion(spec.c2(), spec.c4(), o.window);
  for (int n = -o.window; n <= o.window && rep.pass; ++n)
    for (int m = -o.window; m <= o.window && rep.pass; ++m) {
      const GammaValue closed = gamma_for_spec(spec, n, m);
      const GammaValue residue = gamma_residue_oracle(n, m, o.order);
      const GammaValue recursion = rec.at({n, m});
      rep.checked += 2;
      if (!(closed - residue).is_zero()) {
        rep.fail("closed form vs residue oracle at gamma(" +
                 std::to_string(n) + "," + std::to_string(m) + "): " +
                 poly_to_string(closed) + " vs " + poly_to_string(residue));
      } else if (!(closed - recursion).is_zero()) {
        rep.fail("closed form vs recursion at gamma(" + std::to_string(n) +
                 "," + std::to_string(m) + "): " + poly_to_string(closed) +
                 " vs " + poly_to_string(recursion));
      }
    }
  return finish_suite("gamma-agreement", rep);
}

int suite_gamma_properties(const Options &o) {
  const FamilySpec products = FamilySpec::elliptic();
  const FamilySpec gamma_spec = mutated_spec(o, products);
  const GammaRule rule = [gamma_spec](int n, int m) {
    return gamma_for_spec(gamma_spec, n, m);
  };
  Report rep;
  if (o.p_text.empty())
    rep = verify_gamma_properties(o.window, products, rule);
  else
    rep = verify_gamma_properties(o.window, products, rule,
                                  poly_parse(o.p_text));
  return finish_suite("gamma-properties", rep);
}

int suite_coboundary(const Options &o) {
  const CurrentFamily base{load_lie(o.lie_name), FamilySpec::laurent()};
  Report rep;
  rep.absorb(verify_coboundary(base, AdjCochain2::odd_odd_shift(MultiPoly(1), -2),
                               LinMap1::odd_shift(MultiPoly(Rational(-1, 2)), -2),
                               o.window));
  rep.absorb(verify_coboundary(base, AdjCochain2::odd_odd_shift(MultiPoly(1), -4),
                               LinMap1::odd_shift(MultiPoly(Rational(-1, 2)), -4),
                               o.window));
  return finish_suite("coboundary", rep);
}

int suite_harrison(const Options &o) {
  const FamilySpec base = FamilySpec::laurent();
  const HarrisonCochain2 F = HarrisonCochain2::odd_odd_shift(MultiPoly(3), -2);
  const LinMap1 phi = LinMap1::odd_shift(MultiPoly(Rational(1, 2)), -2);
  return finish_suite("harrison",
                      verify_harrison(base, F, phi, MultiPoly(3), o.window));
}

int suite_rescale(const Options &o) {
  Report rep;
  if (o.spec_name.empty()) {
    rep.absorb(rescale_check(FamilySpec::line_s(), o.window));
    rep.absorb(rescale_check(FamilySpec::line_infinity(), o.window));
  } else {
    const FamilySpec spec = parse_spec(o.spec_name, "lines");
    if (spec.kind() != FamilyKind::LineS &&
        spec.kind() != FamilyKind::LineInfinity &&
        spec.kind() != FamilyKind::Laurent)
      throw UsageError("rescale applies to lines, lineinf or laurent");
    rep = rescale_check(spec, o.window);
  }
  return finish_suite("rescale", rep);
}

int suite_degeneration(const Options &o) {
  Report rep = degeneration_identifications(o.window);
  if (rep.pass) {
    /* singular cocycle tables against the generic recursion */
    struct Case {
      SingularCase c;
      MultiPoly a, b;
      const char *name;
    };
    const MultiPoly alpha2 = MultiPoly::var(ParamId::alpha, 2);
    const std::vector<Case> cases = {
        {SingularCase::Classical, MultiPoly(), MultiPoly(), "classical"},
        {SingularCase::ThreePoint, alpha2, MultiPoly(), "three_point"},
        {SingularCase::WFamily, MultiPoly(-2) * alpha2,
         MultiPoly::var(ParamId::alpha, 4), "W_family"},
    };
    for (const Case &c : cases) {
      const GammaTable rec = gamma_recursion(c.a, c.b, o.window);
      for (int n = -o.window; n <= o.window && rep.pass; ++n)
        for (int m = -o.window; m <= o.window && rep.pass; ++m) {
          ++rep.checked;
          const GammaValue lhs = gamma_singular(c.c, n, m);
          if (!(lhs - rec.at({n, m})).is_zero())
            rep.fail(std::string("singular table '") + c.name +
                     "' vs recursion at gamma(" + std::to_string(n) + "," +
                     std::to_string(m) + ")");
        }
    }
  }
  return finish_suite("degeneration", rep);
}

int suite_grading(const Options &o) {
  Report rep;
  const std::map<FamilyKind, std::pair<int, int>> expected = {
      {FamilyKind::Elliptic, {-4, 0}},     {FamilyKind::LineS, {-4, 0}},
      {FamilyKind::LineInfinity, {-4, 0}}, {FamilyKind::ThreePoint, {-2, 0}},
      {FamilyKind::SubalgebraW, {-4, 0}},  {FamilyKind::Laurent, {0, 0}},
  };
  std::vector<FamilySpec> specs;
  if (o.spec_name.empty())
    specs = all_specs();
  else
    specs.push_back(parse_spec(o.spec_name, "elliptic"));
  for (const FamilySpec &spec : specs) {
    const auto [lo, hi] = grading_bounds_check(spec, o.window);
    ++rep.checked;
    const auto it = expected.find(spec.kind());
    if (it == expected.end()) {
      if (lo < -4 || hi > 0)
        rep.fail("family '" + spec.name() + "' grading [" +
                 std::to_string(lo) + "," + std::to_string(hi) +
                 "] leaves the almost-graded band [-4,0]");
    } else if (it->second != std::make_pair(lo, hi)) {
      rep.fail("family '" + spec.name() + "' grading [" + std::to_string(lo) +
               "," + std::to_string(hi) + "], expected [" +
               std::to_string(it->second.first) + "," +
               std::to_string(it->second.second) + "]");
    }
    if (!rep.pass) break;
  }
  return finish_suite("grading", rep);
}

int cmd_verify(const Options &o) {
  require_window(o.window);
  if (o.suite == "associativity") return suite_associativity(o);
  if (o.suite == "jacobi") return suite_jacobi(o);
  if (o.suite == "gamma-agreement") return suite_gamma_agreement(o);
  if (o.suite == "gamma-properties") return suite_gamma_properties(o);
  if (o.suite == "coboundary") return suite_coboundary(o);
  if (o.suite == "harrison") return suite_harrison(o);
  if (o.suite == "rescale") return suite_rescale(o);
  if (o.suite == "degeneration") return suite_degeneration(o);
  if (o.suite == "grading") return suite_grading(o);
  throw UsageError(
      "unknown suite '" + o.suite +
      "' (expected associativity, jacobi, gamma-agreement, gamma-properties, "
      "coboundary, harrison, rescale, degeneration or grading)");
}

/* ------------------------------------------------------------------ */
/* specialize                                                         */
/* ------------------------------------------------------------------ */

int cmd_specialize(const Options &o) {
  std::map<ParamId, Rational> values;
  auto bind = [&values](const std::string &text, ParamId id) {
    if (!text.empty()) values[id] = rational_from_string(text);
  };
  bind(o.s_text, ParamId::s);
  bind(o.e_text, ParamId::e);
  bind(o.e1_text, ParamId::e1);
  bind(o.e2_text, ParamId::e2);
  bind(o.alpha_text, ParamId::alpha);
  if (values.empty())
    throw UsageError("specialize needs at least one of --s --e --e1 --e2 "
                     "--alpha");

  FamilySpec base = FamilySpec::elliptic();
  if (!o.spec_name.empty()) {
    base = parse_spec(o.spec_name, "elliptic");
  } else if (values.count(ParamId::s) || values.count(ParamId::e)) {
    base = FamilySpec::line_s();
  } else if (values.count(ParamId::alpha)) {
    base = FamilySpec::three_point();
  }

  SubstMap bindings;
  for (const auto &[id, v] : values) bindings[id] = MultiPoly(v);
  const FamilySpec fiber = specialize_family(base, bindings);

  std::cout << "family: " << fiber.name() << "\n";
  std::cout << "rule:   A_n*A_m = A_(n+m)  (n or m even)\n";
  std::cout << "        A_n*A_m = A_(n+m)";
  if (!fiber.c2().is_zero())
    std::cout << " + (" << poly_to_string(fiber.c2()) << ")*A_(n+m-2)";
  if (!fiber.c4().is_zero())
    std::cout << " + (" << poly_to_string(fiber.c4()) << ")*A_(n+m-4)";
  std::cout << "  (n, m odd)\n";

  /* cosmetic recognition of genus-zero shapes */
  if (fiber.kind() == FamilyKind::Custom && fiber.c2().is_constant() &&
      fiber.c4().is_constant()) {
    const Rational q2 = fiber.c2().constant_term();
    const Rational q4 = fiber.c4().constant_term();
    if (q4 == 0 && q2 != 0)
      std::cout << "note:   three-point-isomorphic rule (alpha^2 = "
                << rational_to_string(q2) << ")\n";
    else if (q2 != 0 && q4 == (q2 / -2) * (q2 / -2))
      std::cout << "note:   W-family-isomorphic rule (alpha^2 = "
                << rational_to_string(q2 / -2) << ")\n";
  }

  /* fiber curve data, when the point is numeric */
  std::optional<Rational> e1v, e2v;
  if (base.kind() == FamilyKind::LineS && values.count(ParamId::s) &&
      values.count(ParamId::e)) {
    e1v = values[ParamId::e];
    e2v = values[ParamId::s] * values[ParamId::e];
  } else if (base.kind() == FamilyKind::Elliptic &&
             values.count(ParamId::e1) && values.count(ParamId::e2)) {
    e1v = values[ParamId::e1];
    e2v = values[ParamId::e2];
  }
  if (base.kind() == FamilyKind::LineS && values.count(ParamId::s)) {
    try {
      const Rational j = j_invariant(values[ParamId::s]);
      std::cout << "j-invariant: " << rational_to_string(j) << "\n";
    } catch (const SingularLine &err) {
      std::cout << "warning: " << err.what() << "\n";
    }
  }
  if (e1v && e2v) {
    const Rational e3v = -(*e1v) - (*e2v);
    const Rational disc = discriminant(*e1v, *e2v, e3v);
    std::cout << "discriminant: " << rational_to_string(disc) << "\n";
    if (disc == 0) {
      std::cout << "warning: degenerate fiber (discriminant 0)\n";
    } else if (base.kind() == FamilyKind::Elliptic) {
      /* j = 1728 g2^3 / (g2^3 - 27 g3^2) */
      const Rational g2 =
          4 * ((*e1v) * (*e1v) + (*e1v) * (*e2v) + (*e2v) * (*e2v));
      const Rational g3 = -4 * (*e1v) * (*e2v) * ((*e1v) + (*e2v));
      std::cout << "j-invariant: "
                << rational_to_string(1728 * g2 * g2 * g2 /
                                      (g2 * g2 * g2 - 27 * g3 * g3))
                << "\n";
    }
  }
  return kExitPass;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"deformation families of current algebras: exact tables and "
               "verification suites"};
  app.require_subcommand(1);
  Options o;

  CLI::App *tables =
      app.add_subcommand("tables", "emit product/bracket/cocycle tables");
  tables->add_option("--what", o.what, "products|brackets|gamma")->required();
  tables->add_option("--spec", o.spec_name,
                     "family: elliptic|lines|lineinf|threepoint|w|laurent");
  tables->add_option("--lie", o.lie_name,
                     "sl2 or a structure-constant JSON file");
  tables->add_option("--window", o.window, "index window [-N,N]");
  tables->add_option("--order", o.order, "series truncation order");
  tables->add_option("--route", o.route, "closed|residue|recursion");
  tables->add_option("--format", o.format, "csv|json");
  tables->add_option("--out", o.out_path, "output file (default stdout)");

  CLI::App *verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("--suite", o.suite,
                   "associativity|jacobi|gamma-agreement|gamma-properties|"
                   "coboundary|harrison|rescale|degeneration|grading")
      ->required();
  verify->add_option("--spec", o.spec_name, "family under test");
  verify->add_option("--lie", o.lie_name,
                     "sl2 or a structure-constant JSON file");
  verify->add_option("--window", o.window, "index window [-N,N]");
  verify->add_option("--order", o.order, "series truncation order");
  verify->add_option("--p", o.p_text,
                     "scaling polynomial for the extended bracket");
  verify->add_option("--mutate-c2", o.mutate_c2, "")->group("");
  verify->add_option("--mutate-c4", o.mutate_c4, "")->group("");

  CLI::App *spz = app.add_subcommand(
      "specialize", "specialize a family to parameter values");
  spz->add_option("--spec", o.spec_name,
                  "family: elliptic|lines|lineinf|threepoint|w|laurent");
  spz->add_option("--s", o.s_text, "value of s (rational)");
  spz->add_option("--e", o.e_text, "value of e (rational)");
  spz->add_option("--e1", o.e1_text, "value of e1 (rational)");
  spz->add_option("--e2", o.e2_text, "value of e2 (rational)");
  spz->add_option("--alpha", o.alpha_text, "value of alpha (rational)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (tables->parsed()) return cmd_tables(o);
    if (verify->parsed()) return cmd_verify(o);
    return cmd_specialize(o);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InconsistentBinding &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidStructureConstants &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    std::cerr << "math failure: " << e.what() << "\n";
    return kExitMathFail;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
