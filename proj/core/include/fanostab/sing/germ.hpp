#pragma once

#include <string>

#include "fanostab/algebra/mpoly.hpp"

namespace fanostab {

inline constexpr int kDefaultPrecision = 24;
inline constexpr int kMaxPrecision = 64;

struct GermType {
  enum class Kind { Smooth, A, D4, WorseOrBeyond };
  Kind kind = Kind::Smooth;
  int n = 0;  // A(n): n; WorseOrBeyond(N): the precision reached

  static GermType smooth() { return {Kind::Smooth, 0}; }
  static GermType a(int n) { return {Kind::A, n}; }
  static GermType d4() { return {Kind::D4, 0}; }
  static GermType worse(int precision) { return {Kind::WorseOrBeyond, precision}; }

  bool is_a() const { return kind == Kind::A; }
  bool is_d4() const { return kind == Kind::D4; }
  /// Milnor number; -1 when unknown.
  int milnor() const;
  /// delta invariant: ceil(n/2) for A(n), 3 for D4; -1 when unknown.
  int delta() const;
  /// "Smooth", "A(5)", "D4", "WorseOrBeyond(64)".
  std::string str() const;
  friend bool operator==(const GermType& x, const GermType& y) = default;
};

/// Classifies the plane germ f(x, y) at the origin (f(0,0) = 0 required,
/// InvalidInput otherwise; f = 0 gives DegenerateInput). Double points go
/// through complete_square with precision starting at `precision` and growing
/// to max(precision, kMaxPrecision).
GermType classify_germ(const QPoly& f, int precision = kDefaultPrecision);
GermType classify_germ(const Poly& f, int precision = kDefaultPrecision);

/// Discriminant of the binary cubic a x^3 + b x^2 y + c x y^2 + d y^3.
QuadNum cubic_discriminant(const QuadNum& a, const QuadNum& b, const QuadNum& c, const QuadNum& d);

}  // namespace fanostab
