#pragma once

#include <string>
#include <vector>

#include "fanostab/algebra/mpoly.hpp"

namespace fanostab {

/// Dense univariate polynomial, coefficient i multiplies X^i; never has a
/// trailing zero coefficient.
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }
  UPoly(const K& c) : c_{c} { trim(); }  // NOLINT(google-explicit-constructor)
  static UPoly x() { return UPoly(std::vector<K>{K(0), K(1)}); }

  const std::vector<K>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const K& lc() const { return c_.back(); }
  K coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : K(0); }

  K eval(const K& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) { return a.mul(b); }
  friend UPoly operator*(UPoly a, const K& k) {
    for (auto& c : a.c_) c *= k;
    a.trim();
    return a;
  }
  friend UPoly operator-(UPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DivisionByZero on a zero divisor.
  void divmod(const UPoly& d, UPoly& q, UPoly& r) const;
  UPoly operator%(const UPoly& d) const;
  UPoly operator/(const UPoly& d) const;

  std::string str(const std::string& var = "X") const;

 private:
  UPoly mul(const UPoly& o) const;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;
};

/// Monic gcd (zero if both are zero).
template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b);

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p);

/// Resultant of nonzero polynomials of actual degrees (Sylvester ordering, a first).
template <class K>
K resultant(const UPoly<K>& a, const UPoly<K>& b);

/// Resultant for formal degrees na >= deg a, nb >= deg b (leading zeros allowed).
template <class K>
K resultant_formal(const UPoly<K>& a, int na, const UPoly<K>& b, int nb);

/// Univariate view of a polynomial that involves at most variable `var`.
template <class K>
UPoly<K> to_upoly(const MPoly<K>& f, int var);

template <class K>
MPoly<K> from_upoly(const UPoly<K>& p, const VarList& vars, int var);

using RPoly = UPoly<Rat>;
using QUPoly = UPoly<QuadNum>;

extern template class UPoly<Rat>;
extern template class UPoly<QuadNum>;

}  // namespace fanostab
