#pragma once

#include <string>
#include <vector>

#include "fanostab/algebra/matrix.hpp"
#include "fanostab/algebra/mpoly.hpp"

namespace fanostab {

/// Shared ring x0..x3 of P^3.
const VarList& p3_vars();

/// A quadric q and a cubic g in x0..x3. The cubic matters only modulo
/// q*(linear forms).
struct CurvePair {
  Poly q;
  Poly g;

  /// Validates that q is a nonzero quadratic form and g a nonzero cubic form
  /// in four variables (WrongDegree / DegenerateInput otherwise).
  static CurvePair make(const Poly& q, const Poly& g);
  friend bool operator==(const CurvePair& a, const CurvePair& b) { return a.q == b.q && a.g == b.g; }
};

/// (q o F, g o F): the pair written in the coordinates y with x = F y.
CurvePair transform(const CurvePair& p, const RMatrix& frame);

/// gcd(q, g) is constant. A cubic lying in q*(linear forms) shares q and so
/// counts as not a complete intersection.
bool is_complete_intersection(const CurvePair& p);

/// Multiplies q and g by (independent) nonzero scalars so that the lex-leading
/// coefficients are 1; g is also reduced modulo q*(linear forms) to a fixed
/// representative. Used to compare pairs up to scaling.
CurvePair normalized(const CurvePair& p);

}  // namespace fanostab
