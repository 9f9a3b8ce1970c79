#include "fanostab/verdict/sarkisov.hpp"

#include "fanostab/algebra/gcd.hpp"
#include "fanostab/algebra/matrix.hpp"

namespace fanostab {

const VarList& p4_vars() {
  static const VarList v = projective_vars(5);
  return v;
}

namespace {

std::vector<Poly> shift_up() {
  std::vector<Poly> img;
  for (int i = 1; i <= 4; ++i) img.push_back(Poly::variable(p4_vars(), i));
  return img;
}

}  // namespace

CubicThreefold sarkisov_cubic(const CurvePair& p) {
  const auto img = shift_up();
  const Poly q = p.q.with_vars(p3_vars()).substitute(img);
  const Poly g = p.g.with_vars(p3_vars()).substitute(img);
  return {Poly::variable(p4_vars(), 0) * q - g, is_complete_intersection(p)};
}

CurvePair extract_pair(const Poly& f0, const std::vector<Rat>& vertex) {
  if (f0.nvars() != 5 || vertex.size() != 5) throw Error(ErrorCode::DimensionMismatch, "cubic threefolds live in P^4");
  if (!f0.is_homogeneous() || f0.total_degree() != 3) throw Error(ErrorCode::WrongDegree, "not a cubic form: " + f0.str());
  const Poly f = f0.with_vars(p4_vars());
  std::vector<std::vector<Rat>> cols{vertex};
  for (int j = 0; j < 5 && cols.size() < 5; ++j) {
    std::vector<Rat> e(5, Rat(0));
    e[j] = Rat(1);
    cols.push_back(e);
    if (RMatrix::from_columns(cols).rank() < static_cast<int>(cols.size())) cols.pop_back();
  }
  if (cols.size() < 5) throw Error(ErrorCode::DegenerateInput, "vertex is the zero vector");
  const Poly fv = apply_frame(f, RMatrix::from_columns(cols));
  // Coefficients of x0^k.
  const auto parts = fv.coefficients_in(0);
  auto part = [&](int k) { return k < static_cast<int>(parts.size()) ? parts[k] : Poly(p4_vars()); };
  if (!part(3).is_zero() || !part(2).is_zero() || part(1).is_zero())
    throw Error(ErrorCode::NotADoublePoint, "the vertex is not a double point of the cubic");
  std::vector<Poly> down{Poly(p3_vars())};
  for (int i = 0; i < 4; ++i) down.push_back(Poly::variable(p3_vars(), i));
  return CurvePair::make(part(1).substitute(down), -part(0).substitute(down));
}

}  // namespace fanostab
