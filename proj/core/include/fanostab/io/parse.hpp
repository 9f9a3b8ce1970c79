#pragma once

#include <string>
#include <string_view>

#include "fanostab/algebra/mpoly.hpp"

namespace fanostab {

/// Variable sets accepted by the parser: x0..x3, x0..x4, or u, v, s, w.
enum class Convention { P3, P4, Bidegree };

const VarList& convention_vars(Convention c);
std::string to_string(Convention c);

struct PolyExpr {
  std::string source;
  Poly poly;
  Convention convention = Convention::P3;
};

/// Parses sums of terms built from integer or p/q literals, the convention's
/// variables, '^' with a nonnegative integer exponent, parentheses and
/// optional '*'. Throws SyntaxError naming the position of the problem.
///
/// degree >= 0 additionally requires a homogeneous form of that degree
/// (P3, P4) or of bidegree (degree, degree) in (u, v; s, w) (Bidegree), and
/// throws DegreeMismatch otherwise.
PolyExpr parse_poly(std::string_view text, Convention c, int degree = -1);

}  // namespace fanostab
