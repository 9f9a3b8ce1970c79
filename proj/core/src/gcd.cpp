#include "fanostab/algebra/gcd.hpp"

namespace fanostab {

namespace {

// Polynomial in one distinguished variable whose coefficients are free of it.
template <class K>
using Dense = std::vector<MPoly<K>>;

template <class K>
int deg(const Dense<K>& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[d].is_zero()) --d;
  return d;
}

template <class K>
void trim(Dense<K>& a) {
  a.resize(deg(a) + 1);
}

template <class K>
MPoly<K> from_dense(const Dense<K>& a, int var, const VarList& vars) {
  MPoly<K> r(vars);
  MPoly<K> x = MPoly<K>::variable(vars, var), pw = MPoly<K>::constant(vars, K(1));
  for (const auto& c : a) {
    r += c * pw;
    pw = pw * x;
  }
  return r;
}

template <class K>
MPoly<K> exact_quotient(const MPoly<K>& f, const MPoly<K>& d) {
  MPoly<K> q;
  if (!divide_exact(f, d, &q)) throw Error(ErrorCode::InvalidInput, "internal: inexact division in gcd");
  return q;
}

template <class K>
MPoly<K> content(const Dense<K>& a) {
  MPoly<K> c;
  bool first = true;
  for (const auto& x : a) {
    if (x.is_zero()) continue;
    c = first ? x.monic() : poly_gcd(c, x);
    first = false;
    if (c.is_constant()) break;
  }
  return c;
}

template <class K>
Dense<K> prem(Dense<K> r, const Dense<K>& b) {
  const int n = deg(b);
  const MPoly<K>& l = b[n];
  int e = deg(r) - n + 1;
  while (deg(r) >= n) {
    const int dr = deg(r);
    const MPoly<K> s = r[dr];
    for (auto& x : r) x = x * l;
    for (int i = 0; i <= n; ++i) r[dr - n + i] -= s * b[i];
    trim(r);
    --e;
  }
  const MPoly<K> le = l.pow(std::max(e, 0));
  for (auto& x : r) x = x * le;
  return r;
}

// gcd of two polynomials primitive in the main variable, both of positive degree.
template <class K>
Dense<K> subresultant_gcd(Dense<K> a, Dense<K> b, const VarList& vars) {
  if (deg(a) < deg(b)) std::swap(a, b);
  MPoly<K> g = MPoly<K>::constant(vars, K(1)), h = g;
  while (true) {
    const int delta = deg(a) - deg(b);
    Dense<K> r = prem(a, b);
    if (deg(r) < 0) return b;
    if (deg(r) == 0) return Dense<K>{MPoly<K>::constant(vars, K(1))};
    a = b;
    const MPoly<K> div = g * h.pow(delta);
    for (auto& x : r) x = exact_quotient(x, div);
    b = r;
    g = a[deg(a)];
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_quotient(g.pow(delta), h.pow(delta - 1));
    }
  }
}

template <class K>
Dense<K> to_dense(const MPoly<K>& f, int var) {
  return f.coefficients_in(var);
}

}  // namespace

template <class K>
MPoly<K> poly_gcd(const MPoly<K>& f, const MPoly<K>& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::DegenerateInput, "gcd of two zero polynomials");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  const VarList vars = f.vars_ptr() ? f.vars_ptr() : g.vars_ptr();
  if (f.is_constant() || g.is_constant()) return MPoly<K>::constant(vars, K(1));

  int var = -1;
  for (int i = 0; i < f.nvars() && var < 0; ++i)
    if (f.degree(i) > 0 || g.degree(i) > 0) var = i;

  if (f.degree(var) <= 0) return poly_gcd(f, content(to_dense(g, var)));
  if (g.degree(var) <= 0) return poly_gcd(g, content(to_dense(f, var)));

  Dense<K> a = to_dense(f, var), b = to_dense(g, var);
  const MPoly<K> ca = content(a), cb = content(b);
  for (auto& x : a) x = exact_quotient(x, ca);
  for (auto& x : b) x = exact_quotient(x, cb);
  const MPoly<K> c = poly_gcd(ca, cb);

  Dense<K> h = subresultant_gcd(a, b, vars);
  const MPoly<K> ch = content(h);
  for (auto& x : h) x = exact_quotient(x, ch);
  return (c * from_dense(h, var, vars)).monic();
}

template <class K>
bool is_squarefree(const MPoly<K>& f) {
  if (f.is_zero()) return false;
  MPoly<K> g = f;
  for (int i = 0; i < f.nvars() && !g.is_constant(); ++i) {
    const MPoly<K> d = f.derivative(i);
    if (!d.is_zero()) g = poly_gcd(g, d);
  }
  return g.is_constant();
}

template MPoly<Rat> poly_gcd(const MPoly<Rat>&, const MPoly<Rat>&);
template MPoly<QuadNum> poly_gcd(const MPoly<QuadNum>&, const MPoly<QuadNum>&);
template bool is_squarefree(const MPoly<Rat>&);
template bool is_squarefree(const MPoly<QuadNum>&);

}  // namespace fanostab
