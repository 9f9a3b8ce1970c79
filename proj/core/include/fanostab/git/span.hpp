#pragma once

#include <optional>
#include <vector>

#include "fanostab/algebra/mpoly.hpp"

namespace fanostab {

/// Linear span of finitely many polynomials, kept in reduced echelon form with
/// respect to the lex order of monomials. reduce() returns the canonical
/// representative of f modulo the span: no monomial of it is a pivot.
class SpanReducer {
 public:
  explicit SpanReducer(const std::vector<Poly>& gens);

  Poly reduce(const Poly& f) const;
  bool contains(const Poly& f) const { return reduce(f).is_zero(); }
  int dimension() const { return static_cast<int>(basis_.size()); }

 private:
  std::vector<Poly> basis_;  // monic, pairwise reduced, leading monomials distinct
};

/// Coefficients c with f = sum c_i gens[i], if any.
std::optional<std::vector<Rat>> express_in_span(const Poly& f, const std::vector<Poly>& gens);

/// q * x_i for each variable.
std::vector<Poly> q_times_linears(const Poly& q);

}  // namespace fanostab
