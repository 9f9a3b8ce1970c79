#pragma once

#include "fanostab/algebra/mpoly.hpp"

namespace fanostab {

/// Greatest common divisor over the coefficient field, normalized so the
/// lex-leading coefficient is 1. Subresultant PRS in the first variable that
/// occurs, with recursive contents. Throws DegenerateInput if both are zero.
template <class K>
MPoly<K> poly_gcd(const MPoly<K>& f, const MPoly<K>& g);

/// f / gcd(f, f_x1, ..., f_xn) is the square-free part; true iff that gcd is constant.
template <class K>
bool is_squarefree(const MPoly<K>& f);

extern template MPoly<Rat> poly_gcd(const MPoly<Rat>&, const MPoly<Rat>&);
extern template MPoly<QuadNum> poly_gcd(const MPoly<QuadNum>&, const MPoly<QuadNum>&);
extern template bool is_squarefree(const MPoly<Rat>&);
extern template bool is_squarefree(const MPoly<QuadNum>&);

}  // namespace fanostab
