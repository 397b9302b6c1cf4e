#ifndef KNFAM_TABLE_IO_HPP
#define KNFAM_TABLE_IO_HPP

#include <string>

#include "knfam/central_extensions.hpp"
#include "knfam/current_algebras.hpp"
#include "knfam/function_algebras.hpp"

namespace knfam {

enum class TableFormat { Csv, Json };

/* All emitters are deterministic: rows are ordered lexicographically on
   their integer indices, polynomials use the canonical text form, lines
   end with LF. */

/* Products A_n A_m, window pairs (n,m) in [-N,N]^2.
   CSV header: n,m,j,coeff — one row per nonzero component.
   JSON: rows of {n, m, coeffs: [{degree, poly}]}. */
std::string products_table(const FamilySpec &spec, int window,
                           TableFormat format);

/* Current brackets [x_a (x) A_n, x_b (x) A_m]; a, b, c are 1-based basis
   indices.  CSV header: a,n,b,m,c,j,coeff — one row per nonzero component.
   JSON: rows of {a, n, b, m, coeffs: [{c, degree, poly}]}. */
std::string brackets_table(const CurrentFamily &F, int window,
                           TableFormat format);

/* Cocycle values by route.  CSV header: n,m,gamma,route — one row per
   window pair, zeros included.  JSON: rows of {n, m, gamma, route}.
   `order` is the series truncation for the residue route (ignored by the
   others). */
enum class GammaRoute { Closed, Residue, Recursion };
std::string gamma_route_name(GammaRoute route);
std::string gamma_table_text(int window, GammaRoute route, int order,
                             TableFormat format);

} // namespace knfam

#endif
