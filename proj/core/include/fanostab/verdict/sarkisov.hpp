#pragma once

#include <vector>

#include "fanostab/git/curve_pair.hpp"

namespace fanostab {

/// x0..x4.
const VarList& p4_vars();

struct CubicThreefold {
  Poly f;  // cubic form in x0..x4
  /// The cubic has no common factor between its quadric and cubic parts at the vertex.
  bool integral = false;
};

/// F = x0*q(x1..x4) - g(x1..x4), where x_i of P^3 becomes x_{i+1}.
CubicThreefold sarkisov_cubic(const CurvePair& p);

/// Inverse: moves `vertex` to [1:0:0:0:0] (the frame has the vertex as first
/// column, completed by standard basis vectors), checks that F has
/// multiplicity exactly 2 there (NotADoublePoint otherwise) and returns
/// q = f2, g = f3 from F(1, x) = f2(x) - f3(x).
CurvePair extract_pair(const Poly& f, const std::vector<Rat>& vertex);

}  // namespace fanostab
