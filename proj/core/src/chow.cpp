#include "fanostab/chow/chow.hpp"

namespace fanostab {

namespace {

const VarList& chow_vars() {
  static const VarList v = make_vars({"h", "eta", "xi"});
  return v;
}

Poly kill_h4(const Poly& p) {
  Poly r(chow_vars());
  for (const auto& [e, c] : p.terms())
    if (e[0] < 4) r.add_term(e, c);
  return r;
}

}  // namespace

ChowClass::ChowClass() : p_(chow_vars()) {}
ChowClass::ChowClass(Poly p) : p_(kill_h4(p)) {}

ChowClass ChowClass::h() { return ChowClass(Poly::variable(chow_vars(), 0)); }
ChowClass ChowClass::eta() { return ChowClass(Poly::variable(chow_vars(), 1)); }
ChowClass ChowClass::xi() { return ChowClass(Poly::variable(chow_vars(), 2)); }
ChowClass ChowClass::constant(const Rat& c) { return ChowClass(Poly::constant(chow_vars(), c)); }

Rat ChowClass::coeff(int a, int b, int c) const { return p_.coeff({a, b, c}); }

ChowClass operator*(const ChowClass& x, const ChowClass& y) { return ChowClass(x.p_ * y.p_); }

ChowClass ChowClass::pow(int e) const {
  ChowClass r = constant(Rat(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string ChowClass::str() const {
  // xi before eta reads the way the classes are usually written.
  Poly q(make_vars({"xi", "eta", "h"}));
  for (const auto& [e, c] : p_.terms()) q.add_term({e[2], e[1], e[0]}, c);
  return q.str();
}

BlowupData BlowupData::standard() {
  const ChowClass h = ChowClass::h(), eta = ChowClass::eta(), xi = ChowClass::xi();
  const ChowClass c3h = Rat(3) * h + xi, c2h = Rat(2) * h + eta;
  return {c3h * c2h, Rat(5) * h + xi + eta, c3h * c2h};
}

ChowClass push_p3(const ChowClass& c) {
  ChowClass r;
  for (const auto& [e, v] : c.poly().terms()) {
    if (e[0] != 3) continue;
    r = r + v * ChowClass::eta().pow(e[1]) * ChowClass::xi().pow(e[2]);
  }
  return r;
}

ChowClass blowup_push(int a, int b, const BlowupData& data) {
  if (a < 0 || b < 0 || a + b != 4) throw Error(ErrorCode::WrongDegree, "blowup_push needs a + b = 4");
  // rho_* E = 0 for a codimension-2 center; rho_* E^b = (-1)^(b-1) s_{b-2}(N) [Y] for b >= 2.
  if (b <= 1) return push_p3(ChowClass::h().pow(a) * (b == 0 ? ChowClass::constant(Rat(1)) : ChowClass()));
  const ChowClass segre[] = {ChowClass::constant(Rat(1)), -data.gamma, data.gamma * data.gamma - data.c2};
  const ChowClass s = segre[b - 2];
  const Rat sign = (b - 1) % 2 == 0 ? Rat(1) : Rat(-1);
  return push_p3(sign * (ChowClass::h().pow(a) * s * data.center));
}

ChowClass cm_class(const BlowupData& data) {
  // (4H - E)^4 = sum_b C(4,b) 4^(4-b) (-1)^b H^(4-b) E^b
  static const int binom[] = {1, 4, 6, 4, 1};
  ChowClass total;
  for (int b = 0; b <= 4; ++b) {
    Rat c(binom[b]);
    c *= Rat(4).pow(4 - b);
    if (b % 2) c = -c;
    total = total + c * blowup_push(4 - b, b, data);
  }
  return -total;
}

Rat slope(const ChowClass& c) {
  const Rat a = c.coeff(0, 1, 0), b = c.coeff(0, 0, 1);
  if (a.is_zero()) throw Error(ErrorCode::DegenerateInput, "class has no eta component");
  return b / a;
}

PEConstants pe_constants() {
  // ch(E) = 20 - 4 exp(-eta); only the degree 0 and 1 parts are needed.
  const Rat ch0 = Rat(20) - Rat(4);
  const Rat ch1 = Rat(-4) * Rat(-1);
  const int rank = static_cast<int>(ch0.num().get_si());
  const ChowClass eta = ChowClass::eta(), xi = ChowClass::xi();
  const ChowClass c1 = ch1 * eta;
  // omega_{P(E)} = -rank*xi + pi^*(omega_{P^9} - c1(E)), omega_{P^9} = -10 eta.
  const ChowClass omega = Rat(-rank) * xi + Rat(-10) * eta - c1;
  return {rank, c1, omega, Rat(0), Rat(1, 2)};
}

}  // namespace fanostab
