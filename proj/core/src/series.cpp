#include "fanostab/algebra/series.hpp"

namespace fanostab {

namespace {

template <class K>
MPoly<K> truncate(const MPoly<K>& p, int n) {
  MPoly<K> r(p.vars_ptr());
  for (const auto& [e, c] : p.terms()) {
    int d = 0;
    for (int x : e) d += x;
    if (d < n) r.add_term(e, c);
  }
  return r;
}

// Dense series in x modulo x^n.
template <class K>
using XSeries = std::vector<K>;

template <class K>
XSeries<K> xmul(const XSeries<K>& a, const XSeries<K>& b, int n) {
  XSeries<K> r(n, K(0));
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

template <class K>
MPoly<K> xpoly(const XSeries<K>& s, const VarList& vars) {
  MPoly<K> r(vars);
  for (int i = 0; i < static_cast<int>(s.size()); ++i) r.add_term({i, 0}, s[i]);
  return r;
}

}  // namespace

template <class K>
TruncSeries<K>::TruncSeries(const MPoly<K>& base, int precision) : p_(truncate(base, precision)), n_(precision) {
  if (precision < 1) throw Error(ErrorCode::InvalidInput, "series precision must be positive");
}

template <class K>
TruncSeries<K> TruncSeries<K>::inverse() const {
  const K c = p_.constant_term();
  if (c.is_zero()) throw Error(ErrorCode::DegenerateInput, "series without constant term is not invertible");
  const MPoly<K> one = MPoly<K>::constant(p_.vars_ptr(), K(1));
  const MPoly<K> g = p_ * (K(1) / c) - one;  // f = c (1 + g)
  MPoly<K> sum = one, term = one;
  for (int k = 1; k < n_; ++k) {
    term = truncate(term * g, n_) * K(-1);
    sum += term;
  }
  return TruncSeries(sum * (K(1) / c), n_);
}

template <class K>
SquareCompletion<K> complete_square(const TruncSeries<K>& f) {
  const MPoly<K>& p = f.poly();
  const int n = f.precision();
  if (p.nvars() != 2) throw Error(ErrorCode::DimensionMismatch, "germ must be in two local variables");
  if (p.min_degree() != 2) throw Error(ErrorCode::WrongMultiplicity, "multiplicity is not 2");
  const K c = p.coeff({0, 2});
  if (c.is_zero()) throw Error(ErrorCode::NeedsLinearPreparation, "no y^2 term in the quadratic part");

  // F[k] = coefficient of y^k as a series in x.
  const int ky = std::max(p.degree(1), 0);
  std::vector<XSeries<K>> F(ky + 1, XSeries<K>(n, K(0)));
  for (const auto& [e, v] : p.terms()) F[e[1]][e[0]] += v;

  auto powers = [&](const XSeries<K>& phi) {
    std::vector<XSeries<K>> pw{XSeries<K>(n, K(0))};
    pw[0][0] = K(1);
    for (int k = 1; k <= ky; ++k) pw.push_back(xmul(pw.back(), phi, n));
    return pw;
  };

  // Fixed point for f_y(x, phi(x)) = 0; each pass gains at least one x-adic order.
  XSeries<K> phi(n, K(0));
  const K inv2c = K(1) / (K(2) * c);
  for (int it = 0; it <= n; ++it) {
    const auto pw = powers(phi);
    XSeries<K> fy(n, K(0));
    for (int k = 1; k <= ky; ++k) {
      const XSeries<K> t = xmul(F[k], pw[k - 1], n);
      for (int i = 0; i < n; ++i) fy[i] += t[i] * K(k);
    }
    bool zero = true;
    for (int i = 0; i < n; ++i) {
      if (fy[i].is_zero()) continue;
      zero = false;
      phi[i] -= fy[i] * inv2c;
    }
    if (zero) break;
  }

  const auto pw = powers(phi);
  XSeries<K> b(n, K(0));
  for (int k = 0; k <= ky; ++k) {
    const XSeries<K> t = xmul(F[k], pw[k], n);
    for (int i = 0; i < n; ++i) b[i] -= t[i];
  }

  // unit = sum_{k>=2} D_k(x) (y - phi)^(k-2), D_k = sum_j C(j,k) F_j phi^(j-k).
  const VarList& vars = p.vars_ptr();
  const MPoly<K> y = MPoly<K>::variable(vars, 1);
  const MPoly<K> shift = y - xpoly(phi, vars);
  MPoly<K> unit(vars), spow = MPoly<K>::constant(vars, K(1));
  for (int k = 2; k <= ky; ++k) {
    XSeries<K> d(n, K(0));
    K binom(1);  // C(j, k) starting at j = k
    for (int j = k; j <= ky; ++j) {
      if (j > k) binom = binom * K(j) / K(j - k);
      const XSeries<K> t = xmul(F[j], pw[j - k], n);
      for (int i = 0; i < n; ++i) d[i] += t[i] * binom;
    }
    unit += truncate(xpoly(d, vars) * spow, n);
    spow = truncate(spow * shift, n);
  }

  return {TruncSeries<K>(xpoly(phi, vars), n), TruncSeries<K>(xpoly(b, vars), n), TruncSeries<K>(unit, n)};
}

template class TruncSeries<Rat>;
template class TruncSeries<QuadNum>;
template SquareCompletion<Rat> complete_square(const TruncSeries<Rat>&);
template SquareCompletion<QuadNum> complete_square(const TruncSeries<QuadNum>&);

}  // namespace fanostab
