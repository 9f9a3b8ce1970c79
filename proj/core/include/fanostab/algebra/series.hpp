#pragma once

#include "fanostab/algebra/mpoly.hpp"

namespace fanostab {

/// Power series in two local variables (x, y) known modulo terms of total
/// degree >= precision.
template <class K>
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(const MPoly<K>& base, int precision);

  const MPoly<K>& poly() const { return p_; }
  int precision() const { return n_; }
  bool is_zero() const { return p_.is_zero(); }
  /// Lowest total degree of a term, or -1 if the series vanishes to this precision.
  int order() const { return p_.min_degree(); }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    return TruncSeries(a.p_ + b.p_, std::min(a.n_, b.n_));
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    return TruncSeries(a.p_ - b.p_, std::min(a.n_, b.n_));
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    return TruncSeries(a.p_ * b.p_, std::min(a.n_, b.n_));
  }
  /// Requires a nonzero constant term (DegenerateInput otherwise).
  TruncSeries inverse() const;

 private:
  MPoly<K> p_;
  int n_ = 1;
};

template <class K>
struct SquareCompletion {
  TruncSeries<K> a;     // a(x), the branch y = a(x) of f_y = 0
  TruncSeries<K> b;     // b(x), so f = unit*(y - a)^2 - b
  TruncSeries<K> unit;  // unit(0,0) != 0
};

/// Writes f = unit*(y - a(x))^2 - b(x) up to the precision of f.
/// Requires multiplicity exactly 2 (WrongMultiplicity) and a y^2 term
/// (NeedsLinearPreparation).
template <class K>
SquareCompletion<K> complete_square(const TruncSeries<K>& f);

extern template class TruncSeries<Rat>;
extern template class TruncSeries<QuadNum>;

}  // namespace fanostab
