#ifndef KNFAM_LIE_CORE_HPP
#define KNFAM_LIE_CORE_HPP

#include <string>
#include <vector>

#include "knfam/exact_arith.hpp"
#include "knfam/report.hpp"

namespace knfam {

/* Finite-dimensional Lie algebra given by rational structure constants
   C[a][b][c] with [T_a, T_b] = sum_c C[a][b][c] T_c (0-based indices).
   Construction does not validate; run verify_lie_axioms, or build through
   make_validated which throws InvalidStructureConstants on failure. */
struct FiniteLieAlgebra {
  int dim = 0;
  std::vector<std::vector<std::vector<Rational>>> structure; // [a][b][c]
  std::vector<std::string> basis_names; // optional, for reports

  static FiniteLieAlgebra zero(int dim);
  const Rational &c(int a, int b, int k) const { return structure[a][b][k]; }
  void set(int a, int b, int k, const Rational &v);
  std::string basis_name(int a) const;
};

FiniteLieAlgebra make_validated(FiniteLieAlgebra L);

/* Symmetric bilinear form on the same basis. */
struct BilinearForm {
  std::vector<std::vector<Rational>> matrix;
  const Rational &at(int a, int b) const { return matrix[a][b]; }
};

/* Bracket of coefficient vectors (length dim; DimensionMismatch). */
std::vector<Rational> bracket_fd(const FiniteLieAlgebra &L,
                                 const std::vector<Rational> &x,
                                 const std::vector<Rational> &y);

/* Checks antisymmetry C_ab^c = -C_ba^c and the Jacobi sums over all basis
   index triples. */
Report verify_lie_axioms(const FiniteLieAlgebra &L);

/* Killing form kappa(x,y) = trace(ad x . ad y). */
BilinearForm killing_form(const FiniteLieAlgebra &L);

/* beta([x,y],z) == beta(x,[y,z]) on all basis triples, and symmetry. */
Report verify_invariance(const FiniteLieAlgebra &L, const BilinearForm &B);

/* sl(2) on the ordered basis (h, e, f): [h,e] = 2e, [h,f] = -2f,
   [e,f] = h. */
FiniteLieAlgebra sl2_standard();

/* Load a structure-constant table from JSON text of the shape
   {"dim": n, "entries": [{"a":1,"b":2,"c":3,"value":"1/2"}, ...]} with
   1-based indices; omitted entries are zero.  Values may be JSON numbers
   (integers) or rational strings.  The table is validated. */
FiniteLieAlgebra lie_from_json(const std::string &json_text);
FiniteLieAlgebra lie_from_json_file(const std::string &path);

} // namespace knfam

#endif
