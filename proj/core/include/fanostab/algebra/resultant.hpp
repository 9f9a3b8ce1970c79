#pragma once

#include "fanostab/algebra/upoly.hpp"

namespace fanostab {

/// Res_y(a, b) for polynomials in two variables (x = var 0, y = var 1), as a
/// polynomial in x. The y-degrees of a and b are taken as formal degrees; the
/// result is obtained by evaluating at integer points and interpolating.
template <class K>
UPoly<K> resultant_y(const MPoly<K>& a, const MPoly<K>& b);

/// Newton interpolation through (xs[i], ys[i]) with distinct xs.
template <class K>
UPoly<K> interpolate(const std::vector<K>& xs, const std::vector<K>& ys);

}  // namespace fanostab
