#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fanostab/algebra/quadratic.hpp"
#include "fanostab/algebra/rational.hpp"

namespace fanostab {

using Exponents = std::vector<int>;
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
/// x0..x{n-1}
VarList projective_vars(int n);

// Lexicographic, largest first, so iteration starts at the lex-leading term.
struct LexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
};

/// Sparse multivariate polynomial with coefficients in a field K (Rat or
/// QuadNum). Zero coefficients are never stored; all exponent vectors have
/// length nvars().
template <class K>
class MPoly {
 public:
  using Terms = std::map<Exponents, K, LexGreater>;

  MPoly() = default;
  explicit MPoly(VarList vars) : vars_(std::move(vars)) {}

  static MPoly constant(VarList vars, const K& c) {
    MPoly p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
  }
  static MPoly variable(VarList vars, int i) {
    MPoly p(std::move(vars));
    Exponents e(p.nvars(), 0);
    e.at(i) = 1;
    p.terms_.emplace(std::move(e), K(1));
    return p;
  }
  static MPoly monomial(VarList vars, Exponents e, const K& c) {
    MPoly p(std::move(vars));
    p.add_term(e, c);
    return p;
  }

  const VarList& vars_ptr() const { return vars_; }
  const std::vector<std::string>& vars() const;
  int nvars() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
  int var_index(const std::string& name) const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  K constant_term() const { return coeff(Exponents(nvars(), 0)); }
  K coeff(const Exponents& e) const;
  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const K& leading_coeff() const { return terms_.begin()->second; }

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Lowest total degree of a term (the multiplicity at the origin); -1 for zero.
  int min_degree() const;
  int degree(int var) const;
  bool is_homogeneous() const;
  MPoly homogeneous_part(int d) const;

  void add_term(const Exponents& e, const K& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const K& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) { return a.mul(b); }
  friend MPoly operator*(MPoly a, const K& c) { return a *= c; }
  friend MPoly operator*(const K& c, MPoly a) { return a *= c; }
  friend MPoly operator-(const MPoly& a) {
    MPoly r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly pow(int e) const;
  MPoly derivative(int var) const;
  /// Divides by the lex-leading coefficient; zero stays zero.
  MPoly monic() const;
  K eval(const std::vector<K>& point) const;
  /// Sets variable `var` to `value`; the ring is unchanged.
  MPoly partial_eval(int var, const K& value) const;
  /// Coefficients of powers of `var` (index = exponent); each lives in the same ring.
  std::vector<MPoly> coefficients_in(int var) const;
  /// Simultaneous substitution x_i -> images[i]; all images share one ring.
  MPoly substitute(const std::vector<MPoly>& images) const;
  /// Same polynomial in another ring with the same number of variables.
  MPoly with_vars(VarList vars) const;

  template <class K2, class F>
  MPoly<K2> map_coeffs(F&& f) const {
    MPoly<K2> r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  /// Canonical text form: terms in lex order, e.g. "x0*x3 - x1*x2".
  std::string str() const;

 private:
  MPoly mul(const MPoly& o) const;
  void adopt(const MPoly& o);

  VarList vars_;
  Terms terms_;
};

using Poly = MPoly<Rat>;
using QPoly = MPoly<QuadNum>;

/// Spec-level substitution by variable name; every variable of f needs an image.
template <class K>
MPoly<K> substitute(const MPoly<K>& f, const std::map<std::string, MPoly<K>>& images);

/// Exact multivariate division; returns false if d does not divide f.
template <class K>
bool divide_exact(const MPoly<K>& f, const MPoly<K>& d, MPoly<K>* quotient);

QPoly to_quad(const Poly& p);
/// Throws UnsupportedField if some coefficient is irrational.
Poly to_rational(const QPoly& p);

extern template class MPoly<Rat>;
extern template class MPoly<QuadNum>;
extern template MPoly<Rat> substitute(const MPoly<Rat>&, const std::map<std::string, MPoly<Rat>>&);
extern template MPoly<QuadNum> substitute(const MPoly<QuadNum>&, const std::map<std::string, MPoly<QuadNum>>&);
extern template bool divide_exact(const MPoly<Rat>&, const MPoly<Rat>&, MPoly<Rat>*);
extern template bool divide_exact(const MPoly<QuadNum>&, const MPoly<QuadNum>&, MPoly<QuadNum>*);

}  // namespace fanostab
