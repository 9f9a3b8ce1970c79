#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "fanostab/algebra/errors.hpp"

namespace fanostab {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Thin value wrapper over mpq_class so generic code never sees
/// gmpxx expression templates.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& num) : v_(num) {}  // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Throws SyntaxError / DivisionByZero.
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat inverse() const;
  Rat abs() const { return Rat(::abs(v_)); }
  Rat pow(int e) const;

  /// "p" or "p/q".
  std::string str() const;
  double to_double() const { return v_.get_d(); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

/// Exact square root of a rational if it is a perfect square.
bool rational_sqrt(const Rat& x, Rat& root);

/// Floor of a rational as a big integer.
mpz_class floor(const Rat& x);

}  // namespace fanostab
