#include "fanostab/sing/germ.hpp"

#include <algorithm>

#include "fanostab/algebra/series.hpp"

namespace fanostab {

int GermType::milnor() const {
  switch (kind) {
    case Kind::Smooth: return 0;
    case Kind::A: return n;
    case Kind::D4: return 4;
    default: return -1;
  }
}

int GermType::delta() const {
  switch (kind) {
    case Kind::Smooth: return 0;
    case Kind::A: return (n + 1) / 2;
    case Kind::D4: return 3;
    default: return -1;
  }
}

std::string GermType::str() const {
  switch (kind) {
    case Kind::Smooth: return "Smooth";
    case Kind::A: return "A(" + std::to_string(n) + ")";
    case Kind::D4: return "D4";
    default: return "WorseOrBeyond(" + std::to_string(n) + ")";
  }
}

QuadNum cubic_discriminant(const QuadNum& a, const QuadNum& b, const QuadNum& c, const QuadNum& d) {
  return b * b * c * c - QuadNum(4) * a * c * c * c - QuadNum(4) * b * b * b * d - QuadNum(27) * a * a * d * d +
         QuadNum(18) * a * b * c * d;
}

GermType classify_germ(const QPoly& f, int precision) {
  if (f.nvars() != 2) throw Error(ErrorCode::DimensionMismatch, "germ must be in two local variables");
  if (precision < 3) throw Error(ErrorCode::InvalidInput, "series precision must be at least 3");
  if (f.is_zero()) throw Error(ErrorCode::DegenerateInput, "germ is identically zero");
  if (!f.constant_term().is_zero()) throw Error(ErrorCode::InvalidInput, "germ does not pass through the origin");
  const int mult = f.min_degree();
  if (mult == 1) return GermType::smooth();
  if (mult == 3) {
    const QuadNum disc = cubic_discriminant(f.coeff({3, 0}), f.coeff({2, 1}), f.coeff({1, 2}), f.coeff({0, 3}));
    return disc.is_zero() ? GermType::worse(precision) : GermType::d4();
  }
  if (mult != 2) return GermType::worse(precision);

  // Linear preparation so that y^2 appears in the quadratic part.
  const VarList& v = f.vars_ptr();
  const QPoly x = QPoly::variable(v, 0), y = QPoly::variable(v, 1);
  QPoly g = f;
  if (f.coeff({0, 2}).is_zero()) g = f.coeff({2, 0}).is_zero() ? f.substitute({x + y, y}) : f.substitute({y, x});

  const int cap = std::max(precision, kMaxPrecision);
  for (int n = precision;; n = std::min(2 * n, cap)) {
    const auto sc = complete_square(TruncSeries<QuadNum>(g, n));
    const int ord = sc.b.order();
    if (ord >= 0) return GermType::a(ord - 1);
    if (n >= cap) return GermType::worse(n);
  }
}

GermType classify_germ(const Poly& f, int precision) { return classify_germ(to_quad(f), precision); }

}  // namespace fanostab
