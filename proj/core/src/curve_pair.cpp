#include "fanostab/git/curve_pair.hpp"

#include "fanostab/algebra/gcd.hpp"
#include "fanostab/git/span.hpp"

namespace fanostab {

const VarList& p3_vars() {
  static const VarList v = projective_vars(4);
  return v;
}

CurvePair CurvePair::make(const Poly& q, const Poly& g) {
  if (q.nvars() != 4 || g.nvars() != 4)
    throw Error(ErrorCode::DimensionMismatch, "curve pairs live in four variables");
  if (q.is_zero() || g.is_zero()) throw Error(ErrorCode::DegenerateInput, "q and g must be nonzero");
  if (!q.is_homogeneous() || q.total_degree() != 2)
    throw Error(ErrorCode::WrongDegree, "q is not a quadratic form: " + q.str());
  if (!g.is_homogeneous() || g.total_degree() != 3)
    throw Error(ErrorCode::WrongDegree, "g is not a cubic form: " + g.str());
  return {q.with_vars(p3_vars()), g.with_vars(p3_vars())};
}

CurvePair transform(const CurvePair& p, const RMatrix& frame) {
  if (frame == RMatrix::identity(4)) return p;
  return {apply_frame(p.q, frame), apply_frame(p.g, frame)};
}

bool is_complete_intersection(const CurvePair& p) {
  return poly_gcd(p.q, p.g).is_constant();
}

std::vector<Poly> q_times_linears(const Poly& q) {
  std::vector<Poly> v;
  for (int i = 0; i < q.nvars(); ++i) v.push_back(q * Poly::variable(q.vars_ptr(), i));
  return v;
}

CurvePair normalized(const CurvePair& p) {
  const Poly g = SpanReducer(q_times_linears(p.q)).reduce(p.g);
  return {p.q.monic(), g.monic()};
}

}  // namespace fanostab
