#include "fanostab/algebra/resultant.hpp"

namespace fanostab {

template <class K>
UPoly<K> interpolate(const std::vector<K>& xs, const std::vector<K>& ys) {
  const std::size_t n = xs.size();
  std::vector<K> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPoly<K> r;
  for (std::size_t k = n; k-- > 0;) {
    r = r * UPoly<K>(std::vector<K>{-xs[k], K(1)}) + UPoly<K>(dd[k]);
  }
  return r;
}

namespace {

template <class K>
UPoly<K> specialize_x(const MPoly<K>& f, const K& x) {
  std::vector<K> c(std::max(0, f.degree(1) + 1), K(0));
  for (const auto& [e, v] : f.terms()) {
    K t = v;
    for (int k = 0; k < e[0]; ++k) t *= x;
    c[e[1]] += t;
  }
  return UPoly<K>(std::move(c));
}

}  // namespace

template <class K>
UPoly<K> resultant_y(const MPoly<K>& a, const MPoly<K>& b) {
  if (a.nvars() != 2 || b.nvars() != 2) throw Error(ErrorCode::DimensionMismatch, "resultant_y needs two variables");
  if (a.is_zero() || b.is_zero()) return UPoly<K>();
  const int na = a.degree(1), nb = b.degree(1);
  if (na == 0 && nb == 0) return UPoly<K>(K(1));
  // deg_x Res <= nb*deg_x(a) + na*deg_x(b), and <= tdeg(a)*tdeg(b).
  const int bound = std::min(nb * a.degree(0) + na * b.degree(0), a.total_degree() * b.total_degree());
  std::vector<K> xs, ys;
  for (int i = 0; i <= bound; ++i) {
    const K x(i);
    xs.push_back(x);
    ys.push_back(resultant_formal(specialize_x(a, x), na, specialize_x(b, x), nb));
  }
  return interpolate(xs, ys);
}

template UPoly<Rat> interpolate(const std::vector<Rat>&, const std::vector<Rat>&);
template UPoly<QuadNum> interpolate(const std::vector<QuadNum>&, const std::vector<QuadNum>&);
template UPoly<Rat> resultant_y(const MPoly<Rat>&, const MPoly<Rat>&);
template UPoly<QuadNum> resultant_y(const MPoly<QuadNum>&, const MPoly<QuadNum>&);

}  // namespace fanostab
