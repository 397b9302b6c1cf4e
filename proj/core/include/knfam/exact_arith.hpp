#ifndef KNFAM_EXACT_ARITH_HPP
#define KNFAM_EXACT_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knfam/errors.hpp"

namespace knfam {

/* Exact rational scalar: arbitrary-precision, always in lowest terms with
   positive denominator (maintained by the backend). */
using Rational = boost::multiprecision::cpp_rational;

Rational rational_from_string(const std::string &text);
std::string rational_to_string(const Rational &r);

/* Closed parameter alphabet.  The enumerators are declared in lexicographic
   order of their names so that enum order and name order coincide. */
enum class ParamId : std::uint8_t { a, alpha, b, e, e1, e2, g2, g3, s, t };

inline constexpr std::array<ParamId, 10> all_params = {
    ParamId::a,  ParamId::alpha, ParamId::b,  ParamId::e,  ParamId::e1,
    ParamId::e2, ParamId::g2,    ParamId::g3, ParamId::s,  ParamId::t};

const std::string &param_name(ParamId id);
ParamId param_from_name(const std::string &name); // throws ParseError

/* A monomial is the sorted list of (parameter, positive exponent) factors.
   Comparing two monomials with the default vector/pair order is exactly the
   lexicographic factor-sequence order used for canonical term sorting. */
using Monomial = std::vector<std::pair<ParamId, int>>;

using SubstMap = std::map<ParamId, class MultiPoly>;
using EvalPoint = std::map<ParamId, Rational>;

/* Sparse multivariate polynomial over Rational in the closed alphabet.
   Canonical form: no zero coefficients stored; equality is term-map
   equality. */
class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(const Rational &c);
  MultiPoly(long long c); // implicit: integer constants read naturally

  static MultiPoly var(ParamId id, int exp = 1);
  static MultiPoly constant(const Rational &c);

  bool is_zero() const { return m_terms.empty(); }
  bool is_constant() const;
  /* The constant term (zero if absent). */
  Rational constant_term() const;

  const std::map<Monomial, Rational> &terms() const { return m_terms; }

  bool operator==(const MultiPoly &o) const { return m_terms == o.m_terms; }
  bool operator!=(const MultiPoly &o) const { return !(*this == o); }
  /* Arbitrary total order (term-map comparison); for use as container key. */
  bool operator<(const MultiPoly &o) const { return m_terms < o.m_terms; }

  MultiPoly operator-() const;
  MultiPoly &operator+=(const MultiPoly &o);
  MultiPoly &operator-=(const MultiPoly &o);

  friend MultiPoly operator+(MultiPoly p, const MultiPoly &q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly &q) { return p -= q; }
  friend MultiPoly operator*(const MultiPoly &p, const MultiPoly &q);

  MultiPoly &operator*=(const MultiPoly &o) { return *this = *this * o; }

  /* Does the parameter occur in any term? */
  bool depends_on(ParamId id) const;
  /* Largest exponent of the parameter across terms (0 if absent). */
  int degree_in(ParamId id) const;

  void add_term(const Monomial &m, const Rational &c); // canonicalizing

private:
  std::map<Monomial, Rational> m_terms;
};

/* pow with non-negative integer exponent (pow(p,0) = 1). */
MultiPoly poly_pow(const MultiPoly &p, int exp);

/* Homomorphic substitution; parameters absent from the bindings map are left
   untouched (identity binding). */
MultiPoly poly_substitute(const MultiPoly &p, const SubstMap &bindings);

/* Replace every even power id^(2j) by q^j.  Throws InconsistentBinding if an
   odd power of id occurs; used for substitutions fixing the square of a
   parameter (e.g. alpha^2 -> 3e). */
MultiPoly poly_substitute_square(const MultiPoly &p, ParamId id,
                                 const MultiPoly &q);

/* Coefficient of id^k, as a polynomial in the remaining parameters. */
MultiPoly poly_coefficient_of(const MultiPoly &p, ParamId id, int k);

/* Exact evaluation; the point must bind every parameter occurring in p. */
Rational poly_eval(const MultiPoly &p, const EvalPoint &point);

/* Canonical text form: terms sorted lexicographically by the (parameter
   name, exponent) factor sequence, e.g. "-6*e1 + 2*e1^2*e2". */
std::string poly_to_string(const MultiPoly &p);

/* Parse the expression grammar: + - * ^ ( ), integer/rational literals and
   parameter names.  Accepts everything poly_to_string emits. */
MultiPoly poly_parse(const std::string &text);

} // namespace knfam

#endif
