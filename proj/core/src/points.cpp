#include "fanostab/sing/points.hpp"

#include <map>
#include <set>

#include "fanostab/algebra/gcd.hpp"
#include "fanostab/algebra/resultant.hpp"
#include "fanostab/algebra/roots.hpp"

namespace fanostab {

QVector normalize_projective(QVector v) {
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    if (!it->is_zero()) {
      const QuadNum inv = it->inverse();
      for (auto& c : v) c *= inv;
      return v;
    }
  throw Error(ErrorCode::DegenerateInput, "zero vector is not a projective point");
}

const VarList& bidegree_vars() {
  static const VarList v = make_vars({"u", "v", "s", "w"});
  return v;
}

namespace {

const VarList& local_vars() {
  static const VarList v = make_vars({"X", "Y"});
  return v;
}

QPoly lx() { return QPoly::variable(local_vars(), 0); }
QPoly ly() { return QPoly::variable(local_vars(), 1); }
QPoly lc(const QuadNum& c) { return QPoly::constant(local_vars(), c); }

std::string vec_str(const QVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ":" : "") + v[i].str();
  return s + "]";
}

// Images of (u, v, s, w) on chart c of P^1 x P^1.
std::vector<QPoly> segre_chart(int c) {
  const QPoly one = lc(QuadNum(1));
  const QPoly a = lx(), b = ly();
  switch (c) {
    case 0: return {a, one, b, one};
    case 1: return {a, one, one, b};
    case 2: return {one, a, b, one};
    default: return {one, a, one, b};
  }
}

// Images of y0..y3 on chart c of the cone minus its vertex.
std::vector<QPoly> cone_chart(int c) {
  const QPoly one = lc(QuadNum(1));
  const QPoly a = lx(), b = ly();
  if (c == 0) return {a, b * b, b, one};
  return {a, one, b, b * b};
}

std::vector<QPoly> segre_images(const std::vector<QPoly>& uvsw) {
  return {uvsw[0] * uvsw[2], uvsw[0] * uvsw[3], uvsw[1] * uvsw[2], uvsw[1] * uvsw[3]};
}

// y-coordinates parametrized by chart c.
std::vector<QPoly> chart_embedding(int rank, int c) {
  return rank == 4 ? segre_images(segre_chart(c)) : cone_chart(c);
}

int chart_count(int rank) { return rank == 4 ? 4 : 2; }

// Chart coordinates of a model point, if the point lies in chart c.
std::optional<std::pair<QuadNum, QuadNum>> chart_coords(int rank, int c, const QVector& m) {
  if (rank == 4) {
    const QuadNum &u = m[0], &v = m[1], &s = m[2], &w = m[3];
    const bool vside = c < 2;
    const bool wside = c == 0 || c == 2;
    if ((vside && v.is_zero()) || (!vside && u.is_zero())) return std::nullopt;
    if ((wside && w.is_zero()) || (!wside && s.is_zero())) return std::nullopt;
    return std::make_pair(vside ? u / v : v / u, wside ? s / w : w / s);
  }
  const QuadNum& d = c == 0 ? m[3] : m[1];
  if (d.is_zero()) return std::nullopt;
  return std::make_pair(m[0] / d, m[2] / d);
}

// Model point from chart coordinates.
QVector model_point(int rank, int c, const QuadNum& x, const QuadNum& y) {
  if (rank == 4) {
    QVector uvsw;
    for (const QPoly& img : segre_chart(c)) uvsw.push_back(img.eval({x, y}));
    const QVector uv = normalize_projective({uvsw[0], uvsw[1]});
    const QVector sw = normalize_projective({uvsw[2], uvsw[3]});
    return {uv[0], uv[1], sw[0], sw[1]};
  }
  QVector yv;
  for (const QPoly& img : cone_chart(c)) yv.push_back(img.eval({x, y}));
  return normalize_projective(yv);
}

QVector model_to_y(int rank, const QVector& m) {
  if (rank == 4) return {m[0] * m[2], m[0] * m[3], m[1] * m[2], m[1] * m[3]};
  return m;
}

std::optional<QVector> y_to_model(int rank, const QVector& y) {
  if (rank == 3) {
    if (y[1].is_zero() && y[2].is_zero() && y[3].is_zero()) return std::nullopt;
    return normalize_projective(y);
  }
  QVector uv = !y[0].is_zero() || !y[2].is_zero() ? QVector{y[0], y[2]} : QVector{y[1], y[3]};
  QVector sw = !y[0].is_zero() || !y[1].is_zero() ? QVector{y[0], y[1]} : QVector{y[2], y[3]};
  uv = normalize_projective(uv);
  sw = normalize_projective(sw);
  return QVector{uv[0], uv[1], sw[0], sw[1]};
}

QPoly chart_poly(const QPoly& gy, int rank, int c) { return gy.substitute(chart_embedding(rank, c)); }

struct ChartSolution {
  std::vector<std::pair<QuadNum, QuadNum>> points;
  std::vector<QUPoly> unresolved;
  // Projection used: eliminated coordinate and shear, X' = X - shear*Y (swapped roles if `swap`).
  bool swap = false;
  Rat shear;
};

QUPoly in_y(const QPoly& p, const QuadNum& x0) { return to_upoly(p.partial_eval(0, x0), 1); }

// Coordinate that the projection keeps, for a chart point.
QuadNum projected(const ChartSolution& s, const QuadNum& x, const QuadNum& y) {
  return s.swap ? y - QuadNum(s.shear) * x : x - QuadNum(s.shear) * y;
}

// Resultants are taken with the formal Y-degree, so an X where both leading
// coefficients vanish is kept as a candidate; no shear is needed for
// completeness, only to separate points on one vertical line.
std::optional<ChartSolution> solve_projected(const QPoly& g, bool swap, const Rat& lam) {
  const QPoly base = swap ? g.substitute({ly(), lx()}) : g;
  const QPoly gs = base.substitute({lx() + ly() * QuadNum(lam), ly()});
  const QPoly gx = gs.derivative(0), gy = gs.derivative(1);
  QUPoly h;
  bool any = false;
  for (const QPoly& other : {gy, gx + gy, gx - gy * QuadNum(2)}) {
    const QUPoly r = resultant_y(gs, other);
    if (r.is_zero()) continue;
    h = any ? upoly_gcd(h, r) : r;
    any = true;
  }
  if (!any) throw Error(ErrorCode::NotReduced, "curve has a multiple component");
  ChartSolution out;
  out.swap = swap;
  out.shear = lam;
  if (h.degree() <= 0) return out;
  FieldRoots fr;
  try {
    fr = field_roots(h);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedField) throw;
    fr.unresolved = {h};
  }
  out.unresolved = fr.unresolved;
  try {
    for (const QuadNum& x0 : fr.roots) {
      const QUPoly p = upoly_gcd(in_y(gs, x0), upoly_gcd(in_y(gx, x0), in_y(gy, x0)));
      if (p.degree() <= 0) continue;
      const FieldRoots yr = field_roots(p);
      if (!yr.unresolved.empty()) return std::nullopt;
      for (const QuadNum& y0 : yr.roots) {
        const QVector pt{x0, y0};
        if (!gs.eval(pt).is_zero() || !gx.eval(pt).is_zero() || !gy.eval(pt).is_zero()) continue;
        const QuadNum a = x0 + QuadNum(lam) * y0;
        if (swap) out.points.emplace_back(y0, a);
        else out.points.emplace_back(a, y0);
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedField) throw;
    return std::nullopt;
  }
  return out;
}

ChartSolution solve_chart(const QPoly& g) {
  if (g.total_degree() <= 1) return {};
  std::optional<ChartSolution> first;
  for (long k = 0; k < 6; ++k) {
    const Rat lam(k % 2 ? (k + 1) / 2 : -(k / 2));
    for (bool swap : {false, true}) {
      auto s = solve_projected(g, swap, lam);
      if (!s) continue;
      if (s->unresolved.empty()) return *s;
      if (!first) first = s;
    }
  }
  if (first) return *first;
  // Every projection left a line whose points need a second extension.
  ChartSolution r;
  r.unresolved.push_back(to_upoly(g.partial_eval(1, QuadNum(0)), 0));
  return r;
}

QPoly germ_at(const QPoly& g, const QuadNum& x, const QuadNum& y) {
  return g.substitute({lx() + lc(x), ly() + lc(y)});
}

bool singular_at(const QPoly& g, const QuadNum& x, const QuadNum& y) {
  const QVector pt{x, y};
  return g.eval(pt).is_zero() && g.derivative(0).eval(pt).is_zero() && g.derivative(1).eval(pt).is_zero();
}

std::optional<QMatrix> inverse_frame(const QuadricInfo& info) { return info.frame->inverse(); }

}  // namespace

QPoly model_cubic(const CurvePair& p, const QuadricInfo& info) {
  if (!info.frame) throw Error(ErrorCode::UnsupportedQuadric, "no normal frame for the quadric");
  return apply_frame(to_quad(p.g), *info.frame);
}

QPoly bidegree_form(const CurvePair& p, const QuadricInfo& info) {
  if (info.rank != 4) throw Error(ErrorCode::UnsupportedQuadric, "bidegree model needs a smooth quadric");
  const VarList& bv = bidegree_vars();
  std::vector<QPoly> uvsw;
  for (int i = 0; i < 4; ++i) uvsw.push_back(QPoly::variable(bv, i));
  return model_cubic(p, info).substitute(segre_images(uvsw));
}

CurvePair pair_from_bidegree(const Poly& f0) {
  if (f0.nvars() != 4) throw Error(ErrorCode::DimensionMismatch, "bidegree forms use u, v, s, w");
  Poly g(p3_vars());
  for (const auto& [e, c] : f0.terms()) {
    const int a = e[0], b = e[2];
    if (a + e[1] != 3 || b + e[3] != 3) throw Error(ErrorCode::WrongDegree, "not of bidegree (3,3): " + f0.str());
    // u^a v^(3-a) s^b w^(3-b) = y0^i y1^(a-i) y2^(b-i) y3^(3-a-b+i) with i = min(a, b).
    const int i = std::min(a, b);
    g.add_term({i, a - i, b - i, 3 - a - b + i}, c);
  }
  return CurvePair::make(smooth_quadric_model(), g);
}

std::string SurfacePoint::str() const { return vec_str(p3) + " " + type.str(); }

std::string SurfacePoint::field() const {
  for (const QuadNum& c : p3)
    if (!c.is_rational()) return "Q(sqrt(" + c.d().get_str() + "))";
  return "Q";
}

bool is_reduced(const CurvePair& p, const QuadricInfo& info) {
  if (info.rank < 3 || !info.frame) throw Error(ErrorCode::UnsupportedQuadric, "reducedness needs a normal frame");
  const QPoly gy = model_cubic(p, info);
  const std::vector<int> charts = info.rank == 4 ? std::vector<int>{0, 3} : std::vector<int>{0, 1};
  for (int c : charts) {
    const QPoly g = chart_poly(gy, info.rank, c);
    if (g.is_zero() || !is_squarefree(g)) return false;
  }
  return true;
}

SingularLocus singular_points(const CurvePair& p, const QuadricInfo& info, const std::vector<QVector>& assist,
                              int precision) {
  if (info.rank < 3) throw Error(ErrorCode::UnsupportedQuadric, "quadric of rank " + std::to_string(info.rank));
  if (!info.frame) throw Error(ErrorCode::UnsupportedQuadric, "no normal frame over Q or a quadratic field");
  if (!is_reduced(p, info)) throw Error(ErrorCode::NotReduced, "curve has a multiple component");

  const int rank = info.rank;
  const QMatrix& f = *info.frame;
  const QPoly gy = model_cubic(p, info);
  std::vector<QPoly> charts;
  for (int c = 0; c < chart_count(rank); ++c) charts.push_back(chart_poly(gy, rank, c));

  SingularLocus out;
  std::map<QVector, SurfacePoint> found;
  auto add = [&](int c, const QuadNum& x, const QuadNum& y, bool user) {
    const QVector m = model_point(rank, c, x, y);
    if (found.count(m)) return;
    SurfacePoint sp;
    sp.chart = c;
    sp.model = m;
    sp.p3 = normalize_projective(f.apply(model_to_y(rank, m)));
    sp.type = classify_germ(germ_at(charts[c], x, y), precision);
    sp.user_supplied = user;
    found.emplace(m, sp);
  };

  std::vector<ChartSolution> sols;
  for (int c = 0; c < chart_count(rank); ++c) {
    sols.push_back(solve_chart(charts[c]));
    for (const auto& [x, y] : sols.back().points) add(c, x, y, false);
  }

  const QPoly qq = to_quad(p.q), gq = to_quad(p.g);
  for (const QVector& x : assist) {
    if (x.size() != 4) throw Error(ErrorCode::DimensionMismatch, "assist points need four coordinates");
    if (!qq.eval(x).is_zero() || !gq.eval(x).is_zero())
      throw Error(ErrorCode::InvalidInput, "assist point " + vec_str(x) + " is not on the curve");
    const auto m = y_to_model(rank, inverse_frame(info)->apply(x));
    if (!m) throw Error(ErrorCode::InvalidInput, "the cone vertex is classified separately");
    bool placed = false;
    for (int c = 0; c < chart_count(rank) && !placed; ++c)
      if (auto xy = chart_coords(rank, c, *m)) {
        if (!singular_at(charts[c], xy->first, xy->second))
          throw Error(ErrorCode::InvalidInput, "assist point " + vec_str(x) + " is not a singular point");
        add(c, xy->first, xy->second, true);
        placed = true;
      }
  }

  // Unresolved root polynomials are covered only if the known points account for all their roots.
  for (int c = 0; c < chart_count(rank); ++c) {
    const ChartSolution& s = sols[c];
    if (s.unresolved.empty()) continue;
    std::vector<std::pair<QuadNum, QuadNum>> local;
    for (const auto& [m, sp] : found)
      if (auto xy = chart_coords(rank, c, m)) {
        local.push_back(*xy);
        if (info.exact && (!xy->first.is_rational() || !xy->second.is_rational()))
          local.emplace_back(xy->first.conj(), xy->second.conj());
      }
    const QPoly base = s.swap ? charts[c].substitute({ly(), lx()}) : charts[c];
    const QPoly gs = base.substitute({lx() + ly() * QuadNum(s.shear), ly()});
    for (const QUPoly& u : s.unresolved) {
      std::set<QuadNum, std::less<>> xs;
      std::map<QuadNum, int, std::less<>> per_x;
      for (const auto& [x, y] : local) {
        const QuadNum xs0 = projected(s, x, y);
        bool root = false;
        try {
          root = u.eval(xs0).is_zero();
        } catch (const Error&) {
        }
        if (!root) continue;
        xs.insert(xs0);
        ++per_x[xs0];
      }
      bool covered = static_cast<int>(xs.size()) == squarefree_part(u).degree();
      for (const auto& [x0, n] : per_x) {
        if (!covered) break;
        try {
          const QUPoly py = upoly_gcd(in_y(gs, x0), upoly_gcd(in_y(gs.derivative(0), x0), in_y(gs.derivative(1), x0)));
          covered = squarefree_part(py).degree() == n;
        } catch (const Error&) {
          covered = false;
        }
      }
      if (!covered) {
        out.complete = false;
        out.unresolved.push_back("chart " + std::to_string(c) + ": " + u.str("X"));
      }
    }
  }

  for (auto& [m, sp] : found) out.points.push_back(sp);
  return out;
}

std::string ConePoint::str() const {
  switch (kind) {
    case Kind::NotThroughVertex: return "NotThroughVertex";
    case Kind::A1: return "A1";
    default: return "Worse(" + upstairs.str() + ")";
  }
}

ConePoint cone_point_type(const CurvePair& p, const QuadricInfo& info, int precision) {
  if (info.rank != 3 || !info.frame) throw Error(ErrorCode::UnsupportedQuadric, "cone point needs a rank 3 quadric");
  const QPoly gy = model_cubic(p, info);
  ConePoint r;
  if (!gy.eval({QuadNum(1), QuadNum(0), QuadNum(0), QuadNum(0)}).is_zero()) return r;
  const QPoly a = lx(), b = ly();
  const QPoly h = gy.substitute({lc(QuadNum(1)), a * a, a * b, b * b});
  r.upstairs = classify_germ(h, precision);
  r.kind = r.upstairs == GermType::a(1) ? ConePoint::Kind::A1 : ConePoint::Kind::Worse;
  return r;
}

namespace {

// Permutation of (u, v, s, w) so that the ruling coordinates come first.
std::vector<QPoly> perm(int family) {
  const VarList& bv = bidegree_vars();
  std::vector<QPoly> x;
  for (int i = 0; i < 4; ++i) x.push_back(QPoly::variable(bv, i));
  if (family == 0) return x;
  return {x[2], x[3], x[0], x[1]};
}

int distinct_roots_binary(const QUPoly& b1, bool root_at_infinity) {
  return squarefree_part(b1).degree() + (root_at_infinity ? 1 : 0);
}

}  // namespace

RulingDecomposition ruling_components(const QPoly& f0) {
  const VarList& bv = bidegree_vars();
  if (f0.nvars() != 4) throw Error(ErrorCode::DimensionMismatch, "bidegree forms use u, v, s, w");
  const QPoly f = f0.with_vars(bv);
  RulingDecomposition out;
  out.residual = f;

  for (int family = 0; family < 2; ++family) {
    // In permuted coordinates the ruling variables are 0, 1 and the others 2, 3.
    const QPoly fp = f.substitute(perm(family));
    std::map<std::pair<int, int>, QPoly> coeffs;  // (e2, e3) -> binary form in vars 0, 1
    for (const auto& [e, c] : fp.terms()) {
      auto it = coeffs.try_emplace({e[2], e[3]}, QPoly(bv)).first;
      it->second.add_term({e[0], e[1], 0, 0}, c);
    }
    QUPoly gd;
    bool infinity = true;
    for (const auto& [k, c] : coeffs) {
      gd = upoly_gcd(gd, to_upoly(c.partial_eval(1, QuadNum(1)), 0));
      if (!c.partial_eval(1, QuadNum(0)).is_zero()) infinity = false;
    }
    std::vector<QVector> roots;
    if (gd.degree() > 0) {
      const FieldRoots fr = field_roots(gd);
      if (!fr.unresolved.empty())
        throw Error(ErrorCode::UnresolvedRoots, "ruling factor polynomial " + fr.unresolved.front().str("u"));
      for (const QuadNum& r : fr.roots) roots.push_back({r, QuadNum(1)});
    }
    if (infinity) roots.push_back({QuadNum(1), QuadNum(0)});

    const QPoly x0 = QPoly::variable(bv, 0), x1 = QPoly::variable(bv, 1);
    for (const QVector& r : roots) {
      // l vanishes at (r0 : r1) on the ruling P^1.
      const QPoly lp = r[1].is_zero() ? x1 : x0 - x1 * r[0];
      RulingFactor rf;
      rf.family = family;
      rf.root = r;
      rf.factor = lp.substitute(perm(family));
      QPoly rest = fp, q;
      int mult = 0;
      while (divide_exact(rest, lp, &q)) {
        rest = q;
        ++mult;
      }
      rf.profile.multiplicity = mult;
      QPoly once;
      divide_exact(fp, lp, &once);
      // Residual restricted to the line: binary cubic in vars 2, 3.
      const QPoly bres = once.partial_eval(0, r[0]).partial_eval(1, r[1]);
      if (!bres.is_zero()) {
        const QUPoly b1 = to_upoly(bres.partial_eval(3, QuadNum(1)), 2);
        const bool inf = bres.partial_eval(3, QuadNum(0)).is_zero();
        rf.profile.contact_points = distinct_roots_binary(b1, inf);
        rf.profile.perfect_cube = rf.profile.contact_points == 1;
        if (rf.profile.perfect_cube) {
          QVector pt;
          if (inf) {
            pt = {QuadNum(1), QuadNum(0)};
          } else {
            const QUPoly lin = squarefree_part(b1);
            pt = {-lin.coeff(0) / lin.coeff(1), QuadNum(1)};
          }
          rf.profile.contact = pt;
          const QVector at{r[0], r[1], pt[0], pt[1]};
          bool sing = true;
          for (int i = 0; i < 4 && sing; ++i) sing = once.derivative(i).eval(at).is_zero();
          rf.profile.singular_on_residual = sing;
        }
      }
      for (int k = 0; k < mult; ++k) {
        QPoly q2;
        if (divide_exact(out.residual, rf.factor, &q2)) out.residual = q2;
      }
      out.factors.push_back(std::move(rf));
    }
  }
  return out;
}

}  // namespace fanostab
