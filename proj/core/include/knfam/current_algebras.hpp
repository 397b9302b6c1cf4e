#ifndef KNFAM_CURRENT_ALGEBRAS_HPP
#define KNFAM_CURRENT_ALGEBRAS_HPP

#include <map>
#include <string>
#include <utility>

#include "knfam/function_algebras.hpp"
#include "knfam/lie_core.hpp"

namespace knfam {

/* Element of g (x) A: finite map (g-basis index a, degree n) -> coefficient. */
class CurrentElement {
public:
  using Key = std::pair<int, int>; // (lie basis index, degree)

  CurrentElement() = default;
  static CurrentElement basis(int a, int n, MultiPoly coeff = MultiPoly(1));

  bool is_zero() const { return m_terms.empty(); }
  const std::map<Key, MultiPoly> &terms() const { return m_terms; }
  void add(int a, int n, const MultiPoly &c);

  bool operator==(const CurrentElement &o) const {
    return m_terms == o.m_terms;
  }
  bool operator!=(const CurrentElement &o) const { return !(*this == o); }

  CurrentElement &operator+=(const CurrentElement &o);
  CurrentElement &operator-=(const CurrentElement &o);
  friend CurrentElement operator+(CurrentElement f, const CurrentElement &g) {
    return f += g;
  }
  friend CurrentElement operator-(CurrentElement f, const CurrentElement &g) {
    return f -= g;
  }
  CurrentElement scaled(const MultiPoly &c) const;

private:
  std::map<Key, MultiPoly> m_terms;
};

/* The current-algebra family g (x) A over a function-algebra family. */
struct CurrentFamily {
  FiniteLieAlgebra lie; // validated at construction
  FamilySpec spec;

  CurrentFamily(FiniteLieAlgebra lie_, FamilySpec spec_);
};

std::string current_to_string(const CurrentFamily &F,
                              const CurrentElement &u);

/* [x (x) A_n, y (x) A_m] = [x,y] (x) (A_n A_m), extended bilinearly. */
CurrentElement current_bracket(const CurrentFamily &F, const CurrentElement &u,
                               const CurrentElement &v);

/* Antisymmetry and the Jacobi identity on all basis triples with degrees in
   [-N, N], symbolically. */
Report verify_jacobi(const CurrentFamily &F, int window);

/* The degeneration identifications:
   (i)  LineS at s = 1 and s = -2 match ThreePoint under alpha^2 -> 3e,
   (ii) LineS at s = -1/2 matches SubalgebraW under alpha^2 -> -3e/2,
   (iii) Elliptic at (e1,e2) = (0,0) matches Laurent;
   each verified as structure-constant equality for every pair (n,m) with
   |n|,|m| <= N. */
Report degeneration_identifications(int window);

} // namespace knfam

#endif
