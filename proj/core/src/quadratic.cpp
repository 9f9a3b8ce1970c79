#include "fanostab/algebra/quadratic.hpp"

namespace fanostab {

void strip_squares(const mpz_class& n, mpz_class& d, mpz_class& s, unsigned long limit) {
  mpz_class m = abs(n);
  s = 1;
  for (unsigned long p = 2; p <= limit; ++p) {
    const unsigned long p2 = p * p;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p2)) {
      m /= p2;
      s *= p;
    }
    if (m < p2) break;
  }
  if (m > 1 && mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    s *= r;
    m = 1;
  }
  d = sgn(n) < 0 ? mpz_class(-m) : m;
}

QuadNum QuadNum::make(const Rat& a, const Rat& b, const mpz_class& d) {
  QuadNum r(a);
  if (b.is_zero() || d == 0) return r;
  if (d > 0 && mpz_perfect_square_p(d.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
    r.a_ += b * Rat(s);
    return r;
  }
  mpz_class dd, s;
  strip_squares(d, dd, s);
  if (dd == 1) {
    r.a_ += b * Rat(s);
    return r;
  }
  r.b_ = b * Rat(s);
  r.d_ = dd;
  return r;
}

QuadNum QuadNum::sqrt_of(const Rat& r) {
  Rat root;
  if (rational_sqrt(r, root)) return QuadNum(root);
  // sqrt(p/q) = sqrt(p*q)/q
  return make(Rat(0), Rat(mpz_class(1), r.den()), r.num() * r.den());
}

const Rat& QuadNum::rational() const {
  if (!is_rational()) throw Error(ErrorCode::UnsupportedField, "expected a rational value, got " + str());
  return a_;
}

void QuadNum::fix() {
  if (b_.is_zero()) d_ = 0;
}

Rat QuadNum::align(const QuadNum& o) const {
  if (o.d_ == d_) return o.b_;
  // Same field iff d1*d2 is a square; then sqrt(d2) = sqrt(d1)*sqrt(d2/d1).
  Rat ratio(o.d_, d_), root;
  if (ratio.sign() > 0 && rational_sqrt(ratio, root)) return o.b_ * root;
  throw Error(ErrorCode::UnsupportedField,
              "values from Q(sqrt " + d_.get_str() + ") and Q(sqrt " + o.d_.get_str() + ") cannot be combined");
}

bool QuadNum::compatible(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational() || y.is_rational() || x.d_ == y.d_) return true;
  Rat ratio(y.d_, x.d_), root;
  return ratio.sign() > 0 && rational_sqrt(ratio, root);
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
  if (o.is_rational()) {
    a_ += o.a_;
    return *this;
  }
  if (is_rational()) {
    a_ += o.a_;
    b_ = o.b_;
    d_ = o.d_;
    return *this;
  }
  b_ += align(o);
  a_ += o.a_;
  fix();
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) { return *this += -o; }

QuadNum& QuadNum::operator*=(const QuadNum& o) {
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
    fix();
    return *this;
  }
  if (is_rational()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
    d_ = o.d_;
    fix();
    return *this;
  }
  const Rat ob = align(o);
  const Rat na = a_ * o.a_ + b_ * ob * Rat(d_);
  const Rat nb = a_ * ob + b_ * o.a_;
  a_ = na;
  b_ = nb;
  fix();
  return *this;
}

QuadNum QuadNum::conj() const {
  QuadNum r = *this;
  r.b_ = -r.b_;
  return r;
}

Rat QuadNum::norm() const {
  if (is_rational()) return a_ * a_;
  return a_ * a_ - b_ * b_ * Rat(d_);
}

QuadNum QuadNum::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return QuadNum(a_.inverse());
  const Rat n = norm();
  QuadNum r = conj();
  r.a_ /= n;
  r.b_ /= n;
  return r;
}

std::optional<QuadNum> QuadNum::sqrt() const {
  if (is_rational()) return sqrt_of(a_);
  // (p + q*sqrt d)^2 = a + b*sqrt d  <=>  p^2 + d q^2 = a, 2pq = b.
  Rat n;
  if (!rational_sqrt(norm(), n)) return std::nullopt;
  for (const Rat& cand : {(a_ + n) / Rat(2), (a_ - n) / Rat(2)}) {
    Rat p;
    if (cand.is_zero() || !rational_sqrt(cand, p)) continue;
    QuadNum r(p);
    r.b_ = b_ / (Rat(2) * p);
    r.d_ = d_;
    r.fix();
    if (r * r == *this) return r;
  }
  return std::nullopt;
}

std::string QuadNum::str() const {
  if (is_rational()) return a_.str();
  std::string s;
  if (!a_.is_zero()) s = a_.str();
  const std::string root = "sqrt(" + d_.get_str() + ")";
  if (b_ == Rat(1)) {
    s += (s.empty() ? "" : "+") + root;
  } else if (b_ == Rat(-1)) {
    s += "-" + root;
  } else {
    if (b_.sign() > 0 && !s.empty()) s += "+";
    s += b_.str() + "*" + root;
  }
  return s;
}

bool operator==(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational() != y.is_rational()) return false;
  if (x.a_ != y.a_) return false;
  if (x.is_rational()) return true;
  if (!QuadNum::compatible(x, y)) return false;
  return x.b_ == x.align(y);
}

bool operator<(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational() != y.is_rational()) return x.is_rational();
  if (x.a_ != y.a_) return x.a_ < y.a_;
  if (x.b_ != y.b_) return x.b_ < y.b_;
  return x.d_ < y.d_;
}

}  // namespace fanostab
