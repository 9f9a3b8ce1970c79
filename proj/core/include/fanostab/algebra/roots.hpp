#pragma once

#include <vector>

#include "fanostab/algebra/upoly.hpp"

namespace fanostab {

/// Distinct rational roots, ascending. Real roots are isolated by Sturm
/// sequences and each isolating interval is shrunk below 1/lc of the integer
/// primitive form, where at most one candidate with admissible denominator
/// remains; that candidate is tested exactly.
std::vector<Rat> rational_roots(const RPoly& p);

/// Number of distinct real roots in (lo, hi] of a square-free polynomial.
int sturm_count(const std::vector<RPoly>& chain, const Rat& lo, const Rat& hi);
std::vector<RPoly> sturm_chain(const RPoly& p);

struct FieldRoots {
  /// Distinct roots lying in Q or in a quadratic field compatible with the coefficients.
  std::vector<QuadNum> roots;
  /// Square-free factors whose roots could not be expressed (degree >= 3, or
  /// quadratic over an incompatible field).
  std::vector<QUPoly> unresolved;
};

/// Roots of p in Q(sqrt d) style fields. If p is rational, a leftover
/// quadratic may open a new quadratic field; if p already has irrational
/// coefficients, roots must stay in that field.
FieldRoots field_roots(const QUPoly& p);

}  // namespace fanostab
