#pragma once

#include <string>

#include "fanostab/algebra/mpoly.hpp"

namespace fanostab {

/// Polynomial in h (hyperplane of P^3), eta and xi with h^4 = 0 imposed on
/// every product. eta and xi carry no relation.
class ChowClass {
 public:
  ChowClass();
  static ChowClass h();
  static ChowClass eta();
  static ChowClass xi();
  static ChowClass constant(const Rat& c);

  const Poly& poly() const { return p_; }
  /// Coefficient of h^a eta^b xi^c.
  Rat coeff(int a, int b, int c) const;
  bool is_zero() const { return p_.is_zero(); }

  friend ChowClass operator+(const ChowClass& x, const ChowClass& y) { return ChowClass(x.p_ + y.p_); }
  friend ChowClass operator-(const ChowClass& x, const ChowClass& y) { return ChowClass(x.p_ - y.p_); }
  friend ChowClass operator-(const ChowClass& x) { return ChowClass(-x.p_); }
  friend ChowClass operator*(const ChowClass& x, const ChowClass& y);
  friend ChowClass operator*(const Rat& c, const ChowClass& x) { return ChowClass(x.p_ * c); }
  friend bool operator==(const ChowClass& x, const ChowClass& y) { return x.p_ == y.p_; }
  ChowClass pow(int e) const;

  /// e.g. "22*xi + 51*eta".
  std::string str() const;

 private:
  explicit ChowClass(Poly p);
  Poly p_;
};

/// The blow-up center and its normal bundle, stored as classes.
struct BlowupData {
  ChowClass center;  // [Y] = (3h+xi)(2h+eta)
  ChowClass gamma;   // c1(N) = 5h+xi+eta
  ChowClass c2;      // c2(N) = (3h+xi)(2h+eta)

  static BlowupData standard();
};

/// Coefficient of h^3: pushforward along P^3 x PE -> PE.
ChowClass push_p3(const ChowClass& c);

/// f_*(H^a E^b) for a + b = 4 computed from `data` (WrongDegree otherwise).
ChowClass blowup_push(int a, int b, const BlowupData& data = BlowupData::standard());

/// -f_*((4H - E)^4), expanded binomially over blowup_push.
ChowClass cm_class(const BlowupData& data = BlowupData::standard());

/// For a class a*eta + b*xi returns b/a, the parameter t of eta + t*xi.
Rat slope(const ChowClass& c);

struct PEConstants {
  int rank;
  ChowClass c1;
  ChowClass omega;
  Rat ample_lo;  // ample range of eta + t*xi is the open interval (ample_lo, ample_hi)
  Rat ample_hi;
};

/// Rank, c1 and canonical class of the projective bundle, derived from
/// ch(E) = 20 - 4 exp(-eta) over P^9.
PEConstants pe_constants();

}  // namespace fanostab
