#include "fanostab/algebra/upoly.hpp"

namespace fanostab {

template <class K>
K UPoly<K>::eval(const K& x) const {
  K acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <class K>
UPoly<K> UPoly<K>::derivative() const {
  std::vector<K> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * K(static_cast<int>(i)));
  return UPoly(std::move(d));
}

template <class K>
UPoly<K> UPoly<K>::monic() const {
  if (c_.empty()) return *this;
  return *this * (K(1) / lc());
}

template <class K>
UPoly<K>& UPoly<K>::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

template <class K>
UPoly<K>& UPoly<K>::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

template <class K>
UPoly<K> UPoly<K>::mul(const UPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UPoly();
  std::vector<K> r(c_.size() + o.c_.size() - 1, K(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(r));
}

template <class K>
void UPoly<K>::divmod(const UPoly& d, UPoly& q, UPoly& r) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<K> rem = c_;
  const int dd = d.degree();
  std::vector<K> quo(std::max(0, degree() - dd + 1), K(0));
  const K inv = K(1) / d.lc();
  for (int i = degree(); i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    const K f = rem[i] * inv;
    quo[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
  }
  rem.resize(std::min<std::size_t>(rem.size(), static_cast<std::size_t>(std::max(dd, 0))));
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

template <class K>
UPoly<K> UPoly<K>::operator%(const UPoly& d) const {
  UPoly q, r;
  divmod(d, q, r);
  return r;
}

template <class K>
UPoly<K> UPoly<K>::operator/(const UPoly& d) const {
  UPoly q, r;
  divmod(d, q, r);
  return q;
}

template <class K>
std::string UPoly<K>::str(const std::string& var) const {
  return from_upoly(*this, make_vars({var}), 0).str();
}

template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / upoly_gcd(p, p.derivative())).monic();
}

template <class K>
K resultant(const UPoly<K>& a, const UPoly<K>& b) {
  if (a.is_zero() || b.is_zero()) return K(0);
  const int n = a.degree(), m = b.degree();
  K pw(1);
  if (m == 0) {
    for (int i = 0; i < n; ++i) pw *= b.lc();
    return pw;
  }
  if (n == 0) {
    for (int i = 0; i < m; ++i) pw *= a.lc();
    return pw;
  }
  const UPoly<K> r = a % b;
  if (r.is_zero()) return K(0);
  const int k = r.degree();
  for (int i = 0; i < n - k; ++i) pw *= b.lc();
  K res = pw * resultant(b, r);
  if ((n * m) % 2 == 1) res = -res;
  return res;
}

template <class K>
K resultant_formal(const UPoly<K>& a, int na, const UPoly<K>& b, int nb) {
  if (a.is_zero() || b.is_zero()) return K(0);
  const int da = a.degree(), db = b.degree();
  if (da < na && db < nb) return K(0);
  if (db < nb) {
    // Expanding the Sylvester determinant along its first column.
    K pw(1);
    for (int i = 0; i < nb - db; ++i) pw *= a.lc();
    return pw * resultant(a, b);
  }
  if (da < na) {
    // Res_{na,nb}(a,b) = (-1)^(na*nb) Res_{nb,na}(b,a).
    K r = resultant_formal(b, nb, a, na);
    return (na * nb) % 2 == 1 ? -r : r;
  }
  return resultant(a, b);
}

template <class K>
UPoly<K> to_upoly(const MPoly<K>& f, int var) {
  std::vector<K> c(std::max(0, f.degree(var) + 1), K(0));
  for (const auto& [e, v] : f.terms()) {
    for (int i = 0; i < static_cast<int>(e.size()); ++i)
      if (i != var && e[i] != 0) throw Error(ErrorCode::InvalidInput, "polynomial is not univariate");
    c[e[var]] += v;
  }
  return UPoly<K>(std::move(c));
}

template <class K>
MPoly<K> from_upoly(const UPoly<K>& p, const VarList& vars, int var) {
  MPoly<K> r(vars);
  Exponents e(vars->size(), 0);
  for (int i = 0; i <= p.degree(); ++i) {
    e[var] = i;
    r.add_term(e, p.coeffs()[i]);
  }
  return r;
}

template class UPoly<Rat>;
template class UPoly<QuadNum>;
template UPoly<Rat> upoly_gcd(UPoly<Rat>, UPoly<Rat>);
template UPoly<QuadNum> upoly_gcd(UPoly<QuadNum>, UPoly<QuadNum>);
template UPoly<Rat> squarefree_part(const UPoly<Rat>&);
template UPoly<QuadNum> squarefree_part(const UPoly<QuadNum>&);
template Rat resultant(const UPoly<Rat>&, const UPoly<Rat>&);
template QuadNum resultant(const UPoly<QuadNum>&, const UPoly<QuadNum>&);
template Rat resultant_formal(const UPoly<Rat>&, int, const UPoly<Rat>&, int);
template QuadNum resultant_formal(const UPoly<QuadNum>&, int, const UPoly<QuadNum>&, int);
template UPoly<Rat> to_upoly(const MPoly<Rat>&, int);
template UPoly<QuadNum> to_upoly(const MPoly<QuadNum>&, int);
template MPoly<Rat> from_upoly(const UPoly<Rat>&, const VarList&, int);
template MPoly<QuadNum> from_upoly(const UPoly<QuadNum>&, const VarList&, int);

}  // namespace fanostab
