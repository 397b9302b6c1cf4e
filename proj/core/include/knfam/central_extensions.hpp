#ifndef KNFAM_CENTRAL_EXTENSIONS_HPP
#define KNFAM_CENTRAL_EXTENSIONS_HPP

#include <functional>
#include <map>
#include <utility>

#include "knfam/current_algebras.hpp"
#include "knfam/function_algebras.hpp"
#include "knfam/lie_core.hpp"
#include "knfam/report.hpp"

namespace knfam {

/* A cocycle value: a polynomial in the family parameters. */
using GammaValue = MultiPoly;

/* Closed-form extension cocycle for a family with product rule
   A_n A_m = A_{n+m} + c2 A_{n+m-2} + c4 A_{n+m-4} (second and third term
   for n, m both odd):

     even/even: -n delta_{m,-n}
     mixed    : 0
     odd/odd  : -n delta_{m,-n} + c2 (-n+1) delta_{m,-n+2}
                               + c4 (-n+2) delta_{m,-n+4}

   It is antisymmetric and supported on degree sums {0, 2, 4}. */
GammaValue gamma_for_spec(const FamilySpec &spec, int n, int m);

/* The smooth-fiber case: c2 = 3 e1, c4 = (e1-e2)(2e1+e2). */
GammaValue gamma_closed_form(int n, int m);

/* Independent residue route on the same family:
   gamma(n,m) = -res_{z=0}( basis_series(n) * d/dz basis_series(m) ).
   The minus sign takes the residue at the out-point negatively.
   `order` is the series truncation (>= 2*max(|n|,|m|) + 8 recommended). */
GammaValue gamma_residue_oracle(int n, int m, int order);

/* Third route: bootstrap the whole table on [-N,N]^2 from
     - locality (zero below degree sum 0),
     - antisymmetry,
     - multiplicativity gamma(fg,h) + gamma(gh,f) + gamma(hf,g) = 0 with
       products A_n A_m = A_{n+m} + a A_{n+m-2} + b A_{n+m-4} (odd-odd),
     - the single normalization gamma(A_2, A_{-2}) = -2,
   for generic symbolic coefficients a, b.  The filled table is swept for
   multiplicativity and antisymmetry before being returned;
   RecursionInconsistent on violation. */
using GammaTable = std::map<std::pair<int, int>, GammaValue>;
GammaTable gamma_recursion(const MultiPoly &a, const MultiPoly &b, int window);

/* The sweep used by gamma_recursion, exposed so corrupted tables can be
   detected: checks antisymmetry on all table cells and multiplicativity on
   all triples |i|,|j|,|k| <= window (table must cover first indices up to
   2*window).  Throws RecursionInconsistent with a witness. */
void check_gamma_table(const GammaTable &table, const MultiPoly &a,
                       const MultiPoly &b, int window);

/* Cocycle tables of the degenerate fibers:
     Classical : -n delta_{m,-n}
     ThreePoint: ... + alpha^2 (-n+1) delta_{m,-n+2} on odd/odd
     WFamily   : ... - 2 alpha^2 (-n+1) delta_{m,-n+2}
                     + alpha^4 (-n+2) delta_{m,-n+4} on odd/odd */
enum class SingularCase { Classical, ThreePoint, WFamily };
GammaValue gamma_singular(SingularCase c, int n, int m);

/* Element of the one-dimensional central extension: a current part plus a
   coefficient of the central generator t. */
struct ExtendedElement {
  CurrentElement current;
  MultiPoly central; /* coefficient of t */

  ExtendedElement() = default;
  explicit ExtendedElement(CurrentElement cur, MultiPoly c = MultiPoly())
      : current(std::move(cur)), central(std::move(c)) {}
  static ExtendedElement central_t(const MultiPoly &c) {
    ExtendedElement x;
    x.central = c;
    return x;
  }
  bool is_zero() const { return current.is_zero() && central.is_zero(); }
};

/* Bracket of the central extension:
     current part: the current-algebra bracket;
     central part: sum over basis terms of p * beta(x,y) * gamma(n,m) with
                   gamma the closed-form cocycle of F.spec;
     [t, anything] = 0.
   beta must be symmetric and invariant for F.lie (NonInvariantForm). */
ExtendedElement extended_bracket(const CurrentFamily &F,
                                 const BilinearForm &beta, const MultiPoly &p,
                                 const ExtendedElement &u,
                                 const ExtendedElement &v);

/* Property suite for a cocycle rule gamma over the products of `spec`:
     (i)   antisymmetry on the window,
     (ii)  locality: nonzero only for n+m in {0, 2, 4},
     (iii) multiplicativity over the family products,
     (iv)  the extended bracket satisfies Jacobi on sl2 basis triples with
           the Killing form and a symbolic scaling polynomial p.
   The one-argument form runs the suite for the smooth family with its own
   closed-form cocycle. */
using GammaRule = std::function<GammaValue(int n, int m)>;
Report verify_gamma_properties(int window);
Report verify_gamma_properties(int window, const FamilySpec &spec,
                               const GammaRule &gamma);
/* as above with an explicit scaling polynomial for part (iv); the default
   is the generic a + b*e1 */
Report verify_gamma_properties(int window, const FamilySpec &spec,
                               const GammaRule &gamma, const MultiPoly &p);

} // namespace knfam

#endif
