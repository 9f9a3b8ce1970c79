#pragma once

#include <optional>
#include <string>

#include "fanostab/algebra/rational.hpp"

namespace fanostab {

/// Element a + b*sqrt(d) of Q or of a single quadratic field Q(sqrt d).
///
/// d is an integer that is not a perfect square (small square factors are
/// stripped) and is 0 exactly when the value is rational. Arithmetic between
/// values from two different quadratic fields throws UnsupportedField.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(const Rat& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadNum(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadNum(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)

  /// a + b*sqrt(d) for any integer d; normalizes d.
  static QuadNum make(const Rat& a, const Rat& b, const mpz_class& d);
  /// sqrt(r) as an element of Q or Q(sqrt r).
  static QuadNum sqrt_of(const Rat& r);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const mpz_class& d() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  /// The rational value; throws UnsupportedField if irrational.
  const Rat& rational() const;

  QuadNum conj() const;
  Rat norm() const;
  QuadNum inverse() const;

  /// Square root inside the field of *this. A rational non-square is allowed
  /// to open the field Q(sqrt r); an irrational value must stay in its field.
  std::optional<QuadNum> sqrt() const;

  /// True if both values live in Q or in one common quadratic field.
  static bool compatible(const QuadNum& x, const QuadNum& y);

  std::string str() const;

  QuadNum& operator+=(const QuadNum& o);
  QuadNum& operator-=(const QuadNum& o);
  QuadNum& operator*=(const QuadNum& o);
  QuadNum& operator/=(const QuadNum& o) { return *this *= o.inverse(); }

  friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
  friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
  friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
  friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }
  friend QuadNum operator-(const QuadNum& x) {
    QuadNum r = x;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }

  friend bool operator==(const QuadNum& x, const QuadNum& y);
  /// Deterministic total order (not the real order): rational first, then by (a, b, d).
  friend bool operator<(const QuadNum& x, const QuadNum& y);

 private:
  // Rewrites o's irrational part over this->d_ when the fields agree.
  Rat align(const QuadNum& o) const;
  void fix();

  Rat a_;
  Rat b_;
  mpz_class d_ = 0;
};

/// Square-free part of a nonzero integer with respect to primes below `limit`,
/// returning d and s with n = d * s^2.
void strip_squares(const mpz_class& n, mpz_class& d, mpz_class& s, unsigned long limit = 1000);

}  // namespace fanostab
