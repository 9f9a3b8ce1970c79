#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fanostab/algebra/matrix.hpp"

namespace fanostab {

/// c0 + c1*eps + c2*eps^2 for a formal positive infinitesimal eps; ordered
/// lexicographically by (c0, c1, c2).
struct EpsNum {
  Rat c0, c1, c2;

  static EpsNum eps() { return {Rat(0), Rat(1), Rat(0)}; }
  friend EpsNum operator+(const EpsNum& a, const EpsNum& b) { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }
  friend EpsNum operator-(const EpsNum& a, const EpsNum& b) { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2}; }
  /// Throws OutOfRange if an eps^3 term would appear.
  friend EpsNum operator*(const EpsNum& a, const EpsNum& b);
  friend bool operator==(const EpsNum& a, const EpsNum& b) = default;
  friend std::strong_ordering operator<=>(const EpsNum& a, const EpsNum& b);
  int sign() const;
  std::string str() const;
};

using LatticeVector = std::vector<Rat>;
using EpsVector = std::vector<EpsNum>;

/// Integer symmetric bilinear form on named basis vectors.
class GramLattice {
 public:
  /// Validates shape and symmetry (InvalidInput / DimensionMismatch).
  GramLattice(std::vector<std::string> names, std::vector<std::vector<long>> gram);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  long entry(int i, int j) const { return gram_[i][j]; }
  bool is_even() const;
  /// Basis vector by name (InvalidInput if unknown).
  LatticeVector basis(const std::string& name) const;
  /// Linear combination from (name, coefficient) pairs.
  LatticeVector vec(const std::vector<std::pair<std::string, Rat>>& terms) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<long>> gram_;
};

/// v^T G w; DimensionMismatch on length mismatch.
Rat pair(const GramLattice& lat, const LatticeVector& v, const LatticeVector& w);
EpsNum pair(const GramLattice& lat, const EpsVector& v, const EpsVector& w);

/// (positive, negative) index of inertia from the exact characteristic polynomial.
std::pair<int, int> signature(const GramLattice& lat);

/// Basis (L, Q), (L^2) = 6, (L.Q) = 0, (Q^2) = -2.
GramLattice lambda0();
/// Basis (H, E) of the restrictions to the anticanonical K3, gram [[4,6],[6,6]].
GramLattice anticanonical_k3_lattice();
/// h1 = L - eps*Q and h2 = 2L - (1 - eps)Q in lambda0().
EpsVector lambda0_h1();
EpsVector lambda0_h2();

/// Sections of a big and nef line bundle of degree d on a K3 surface: d/2 + 2.
/// NotEven for odd d, OutOfRange for d < 2.
int rr_h0(int d);

enum class UnigonalCase { Smooth, A1 };

struct UnigonalRow {
  std::string cls;        // e.g. "2F", "2F1 + 3E"
  std::string condition;  // which constraint was tested
  Rat value;              // value of that constraint on the class
  bool holds = false;
};

struct UnigonalReport {
  UnigonalCase which = UnigonalCase::Smooth;
  GramLattice lattice{{"F"}, {{0}}};
  /// Classes meeting every constraint; empty means the degeneration is impossible.
  std::vector<std::string> solutions;
  /// Case table: every class that survived the degree constraints, with the failing check.
  std::vector<UnigonalRow> table;
  /// Smooth case: the class forced by (L.Gamma) = 2.
  std::string forced;
  /// A1 case: admissible b values and the matching c for each.
  std::vector<long> b_values;
  std::vector<long> c_values;
};

/// Exhaustive search over boxes scaled by `scale` (1 = the default boxes).
UnigonalReport unigonal_obstruction(UnigonalCase c, int scale = 1);

/// Basis (F, E, Q): fiber, section and the exceptional curve over the
/// singular point, with (F.Q) and (E.Q) supplied by the caller.
GramLattice unigonal_nef_lattice(long fq = 0, long eq = 0);

struct NefRow {
  LatticeVector cls;
  Rat two_l;     // (2L . c)
  Rat q;         // (Q . c)
  Rat value;     // ((2L - Q) . c)
};

/// Evaluates (2L - Q).c with L = 4F + E on each test class.
std::vector<NefRow> nef_check_unigonal(const GramLattice& lat, const std::vector<LatticeVector>& tests);

}  // namespace fanostab
