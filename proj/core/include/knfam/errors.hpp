#ifndef KNFAM_ERRORS_HPP
#define KNFAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knfam {

/* Base class for every error thrown by the library. */
struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/* Series inversion requires the lowest retained coefficient to be a nonzero
   rational constant. */
struct InversionLeadingNonUnit : Error {
  explicit InversionLeadingNonUnit(const std::string &msg) : Error(msg) {}
};

/* A residue (or other coefficient) was requested beyond the truncation order
   guaranteed by the series arithmetic. */
struct TruncationTooShallow : Error {
  explicit TruncationTooShallow(const std::string &msg) : Error(msg) {}
};

/* A parameter binding does not make sense for the family kind it was applied
   to (unknown parameter, or a substitution the kind does not support). */
struct InconsistentBinding : Error {
  explicit InconsistentBinding(const std::string &msg) : Error(msg) {}
};

/* Coefficient vectors or matrices of the wrong length for the algebra. */
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string &msg) : Error(msg) {}
};

/* A bilinear form passed to the extension bracket fails symmetry or
   invariance. */
struct NonInvariantForm : Error {
  explicit NonInvariantForm(const std::string &msg) : Error(msg) {}
};

/* First-order cochain extraction is only defined for families whose bracket
   is polynomial in the line parameter e. */
struct NotPolynomialInE : Error {
  explicit NotPolynomialInE(const std::string &msg) : Error(msg) {}
};

/* The cocycle recursion derived contradictory values; signals corrupted
   structure constants. */
struct RecursionInconsistent : Error {
  explicit RecursionInconsistent(const std::string &msg) : Error(msg) {}
};

/* The requested line parameter s lies on a singular line (s = 1, -2, -1/2),
   where the fiber is a nodal cubic and the j-invariant is undefined. */
struct SingularLine : Error {
  explicit SingularLine(const std::string &msg) : Error(msg) {}
};

/* Branch points must satisfy e1 + e2 + e3 = 0. */
struct NotOnCurve : Error {
  explicit NotOnCurve(const std::string &msg) : Error(msg) {}
};

/* Malformed textual input (polynomial expressions, rationals, JSON tables). */
struct ParseError : Error {
  explicit ParseError(const std::string &msg) : Error(msg) {}
};

/* A structure-constant table failed the mandatory Lie-axiom validation. */
struct InvalidStructureConstants : Error {
  explicit InvalidStructureConstants(const std::string &msg) : Error(msg) {}
};

} // namespace knfam

#endif
