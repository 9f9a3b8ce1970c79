#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanostab/git/curve_pair.hpp"

namespace fanostab {

/// A 1-PS of PGL(4): a frame F (x = F y) and integer weights on y0..y3 summing to 0.
struct OnePS {
  RMatrix frame = RMatrix::identity(4);
  std::vector<long> weights{0, 0, 0, 0};

  /// Validates shape, invertibility and the zero-sum condition (InvalidInput).
  static OnePS make(const RMatrix& frame, const std::vector<long>& weights);
  static OnePS diagonal(const std::vector<long>& weights) { return make(RMatrix::identity(4), weights); }
  bool trivial() const;
};

/// mu^t = constant + slope * t.
struct HMValue {
  Rat constant;  // the eta part
  Rat slope;     // the xi part

  Rat at(const Rat& t) const { return constant + slope * t; }
  /// Affine form in t, e.g. "3t-2".
  std::string str() const;
  friend bool operator==(const HMValue& a, const HMValue& b) = default;
};

/// Weight <w, m> of an exponent vector.
long weight(const std::vector<long>& w, const Exponents& m);

/// Hilbert-Mumford index of a pair whose quadric is semi-invariant under l.
/// mu_eta = -(common weight of q), mu_xi = -(least weight present in g modulo
/// q*(linear forms)). Destabilizing at t means at(t) < 0.
/// Throws NotSemiInvariant or NotInFiber.
HMValue hm_index(const CurvePair& p, const OnePS& l);

/// Index for an arbitrary pair: the limit of [q] under l is its lowest-weight
/// part q0, and g is reduced bottom-up against q*(linear forms) until its
/// lowest-weight component leaves q0*(linear forms). Agrees with hm_index when
/// q is semi-invariant. Returns nullopt when g lies in q*(linear forms).
std::optional<HMValue> hm_index_general(const CurvePair& p, const OnePS& l);

/// Componentwise limit keeping the monomials of largest weight in q and g
/// (in the frame), expressed back in the original coordinates.
CurvePair one_ps_limit(const CurvePair& p, const OnePS& l);

/// True if every monomial of f (in the frame of l) has the same weight.
bool is_semi_invariant(const Poly& f, const OnePS& l);

}  // namespace fanostab
