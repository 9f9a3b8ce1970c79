#include "fanostab/algebra/mpoly.hpp"

namespace fanostab {

VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarList projective_vars(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return make_vars(std::move(names));
}

namespace {

const std::vector<std::string>& empty_names() {
  static const std::vector<std::string> none;
  return none;
}

bool same_vars(const VarList& a, const VarList& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

template <class K>
bool needs_parens(const K& c) {
  const std::string s = c.str();
  return s.find_first_of("+-", 1) != std::string::npos || s.find("sqrt") != std::string::npos;
}

}  // namespace

template <class K>
const std::vector<std::string>& MPoly<K>::vars() const {
  return vars_ ? *vars_ : empty_names();
}

template <class K>
int MPoly<K>::var_index(const std::string& name) const {
  const auto& v = vars();
  const auto it = std::find(v.begin(), v.end(), name);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

template <class K>
bool MPoly<K>::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

template <class K>
K MPoly<K>::coeff(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? K(0) : it->second;
}

template <class K>
int MPoly<K>::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

template <class K>
int MPoly<K>::min_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (d < 0 || s < d) d = s;
  }
  return d;
}

template <class K>
int MPoly<K>::degree(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

template <class K>
bool MPoly<K>::is_homogeneous() const {
  return terms_.empty() || total_degree() == min_degree();
}

template <class K>
MPoly<K> MPoly<K>::homogeneous_part(int d) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (s == d) r.terms_.emplace(e, c);
  }
  return r;
}

template <class K>
void MPoly<K>::add_term(const Exponents& e, const K& c) {
  if (static_cast<int>(e.size()) != nvars())
    throw Error(ErrorCode::DimensionMismatch, "exponent vector length differs from variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <class K>
void MPoly<K>::adopt(const MPoly& o) {
  if (same_vars(vars_, o.vars_)) return;
  if (!vars_ && terms_.empty()) {
    vars_ = o.vars_;
    return;
  }
  if (!o.vars_ && o.terms_.empty()) return;
  if (nvars() == 0 && is_constant()) {
    // A constant without a ring acquires the other operand's ring.
    const K c = constant_term();
    vars_ = o.vars_;
    terms_.clear();
    add_term(Exponents(nvars(), 0), c);
    return;
  }
  throw Error(ErrorCode::DimensionMismatch, "polynomials over different variable lists");
}

template <class K>
MPoly<K>& MPoly<K>::operator+=(const MPoly& o) {
  adopt(o);
  if (o.nvars() == 0 && nvars() > 0) {
    add_term(Exponents(nvars(), 0), o.constant_term());
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

template <class K>
MPoly<K>& MPoly<K>::operator-=(const MPoly& o) {
  return *this += -o;
}

template <class K>
MPoly<K>& MPoly<K>::operator*=(const K& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

template <class K>
MPoly<K> MPoly<K>::mul(const MPoly& o) const {
  MPoly a = *this;
  a.adopt(o);
  if (o.nvars() == 0 && a.nvars() > 0) return a * o.constant_term();
  MPoly r(a.vars_);
  const int n = a.nvars();
  Exponents e(n);
  for (const auto& [e1, c1] : a.terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < n; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

template <class K>
MPoly<K> MPoly<K>::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::InvalidInput, "negative exponent");
  MPoly r = constant(vars_, K(1)), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

template <class K>
MPoly<K> MPoly<K>::derivative(int var) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    r.add_term(f, c * K(e[var]));
  }
  return r;
}

template <class K>
MPoly<K> MPoly<K>::monic() const {
  if (terms_.empty()) return *this;
  const K inv = K(1) / leading_coeff();
  return *this * inv;
}

template <class K>
K MPoly<K>::eval(const std::vector<K>& point) const {
  if (static_cast<int>(point.size()) != nvars())
    throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  K sum(0);
  for (const auto& [e, c] : terms_) {
    K t = c;
    for (int i = 0; i < nvars(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

template <class K>
MPoly<K> MPoly<K>::partial_eval(int var, const K& value) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    K t = c;
    for (int k = 0; k < e.at(var); ++k) t *= value;
    Exponents f = e;
    f[var] = 0;
    r.add_term(f, t);
  }
  return r;
}

template <class K>
std::vector<MPoly<K>> MPoly<K>::coefficients_in(int var) const {
  std::vector<MPoly> out(std::max(0, degree(var) + 1), MPoly(vars_));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    out[e[var]].add_term(f, c);
  }
  return out;
}

template <class K>
MPoly<K> MPoly<K>::substitute(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars())
    throw Error(ErrorCode::IncompleteSubstitution, "need one image per variable");
  VarList target = images.empty() ? vars_ : images.front().vars_ptr();
  MPoly r(target);
  // Cache powers of each image; forms here have small degree.
  std::vector<std::vector<MPoly>> powers(nvars());
  for (const auto& [e, c] : terms_) {
    MPoly t = constant(target, c);
    for (int i = 0; i < nvars(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, K(1)));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    r += t;
  }
  return r;
}

template <class K>
MPoly<K> MPoly<K>::with_vars(VarList vars) const {
  if (static_cast<int>(vars->size()) != nvars())
    throw Error(ErrorCode::DimensionMismatch, "variable count differs");
  MPoly r(std::move(vars));
  r.terms_ = terms_;
  return r;
}

template <class K>
std::string MPoly<K>::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    K coef = c;
    bool negative = false;
    if (!needs_parens(c) && c.str().front() == '-') {
      negative = true;
      coef = -c;
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string cs = coef.str();
    if (needs_parens(coef)) cs = "(" + cs + ")";
    if (mono.empty()) {
      out += cs;
    } else if (coef.is_one()) {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

template <class K>
MPoly<K> substitute(const MPoly<K>& f, const std::map<std::string, MPoly<K>>& images) {
  std::vector<MPoly<K>> imgs;
  for (const auto& name : f.vars()) {
    const auto it = images.find(name);
    if (it == images.end()) {
      // Only variables that actually occur need an image.
      const int idx = f.var_index(name);
      bool used = false;
      for (const auto& [e, c] : f.terms()) used = used || e[idx] > 0;
      if (used) throw Error(ErrorCode::IncompleteSubstitution, "no image for variable " + name);
      imgs.emplace_back();
      continue;
    }
    imgs.push_back(it->second);
  }
  VarList target;
  for (const auto& p : imgs)
    if (p.vars_ptr()) target = p.vars_ptr();
  if (!target) target = f.vars_ptr();
  for (auto& p : imgs)
    if (!p.vars_ptr()) p = MPoly<K>(target);
  return f.substitute(imgs);
}

template <class K>
bool divide_exact(const MPoly<K>& f, const MPoly<K>& d, MPoly<K>* quotient) {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  MPoly<K> r = f, q(f.vars_ptr() ? f.vars_ptr() : d.vars_ptr());
  const Exponents& ld = d.leading_exponents();
  const K inv = K(1) / d.leading_coeff();
  const int n = static_cast<int>(ld.size());
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    Exponents e(n);
    for (int i = 0; i < n; ++i) {
      e[i] = lr[i] - ld[i];
      if (e[i] < 0) return false;
    }
    const MPoly<K> t = MPoly<K>::monomial(r.vars_ptr(), e, r.leading_coeff() * inv);
    q += t;
    r -= t * d;
  }
  if (quotient) *quotient = q;
  return true;
}

QPoly to_quad(const Poly& p) {
  return p.map_coeffs<QuadNum>([](const Rat& c) { return QuadNum(c); });
}

Poly to_rational(const QPoly& p) {
  return p.map_coeffs<Rat>([](const QuadNum& c) { return c.rational(); });
}

template class MPoly<Rat>;
template class MPoly<QuadNum>;
template MPoly<Rat> substitute(const MPoly<Rat>&, const std::map<std::string, MPoly<Rat>>&);
template MPoly<QuadNum> substitute(const MPoly<QuadNum>&, const std::map<std::string, MPoly<QuadNum>>&);
template bool divide_exact(const MPoly<Rat>&, const MPoly<Rat>&, MPoly<Rat>*);
template bool divide_exact(const MPoly<QuadNum>&, const MPoly<QuadNum>&, MPoly<QuadNum>*);

}  // namespace fanostab
