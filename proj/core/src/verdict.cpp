#include "fanostab/verdict/verdict.hpp"

#include "fanostab/git/walls.hpp"

namespace fanostab {

std::string to_string(Level l) {
  switch (l) {
    case Level::KStable: return "KStable";
    case Level::KPolystableNotStable: return "KPolystableNotStable";
    case Level::KSemistableNotPolystable: return "KSemistableNotPolystable";
    case Level::KUnstable: return "KUnstable";
    default: return "Unknown";
  }
}

bool is_semistable(Level l) { return l != Level::KUnstable && l != Level::Unknown; }
bool is_polystable(Level l) { return l == Level::KStable || l == Level::KPolystableNotStable; }

namespace {

std::string pt_str(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ":" : "") + v[i].str();
  return s + ")";
}

// Model coordinates (u, v, s, w) of the contact point of a ruling.
QVector contact_model(const RulingFactor& r) {
  const QVector& c = *r.profile.contact;
  return r.family == 0 ? QVector{r.root[0], r.root[1], c[0], c[1]} : QVector{c[0], c[1], r.root[0], r.root[1]};
}

std::string ruling_str(const RulingFactor& r) {
  std::string s = "ruling " + r.factor.str() + " meets the residual curve in " +
                  std::to_string(r.profile.contact_points) + " point(s)";
  if (r.profile.perfect_cube)
    s += r.profile.singular_on_residual ? ", singular on the residual" : ", smooth on the residual";
  return s;
}

Verdict unstable(Verdict v, const std::string& why) {
  v.level = Level::KUnstable;
  v.reasons.push_back(why);
  return v;
}

void record_points(Verdict& v, const SingularLocus& loc) {
  v.singularities = loc.points;
  if (loc.points.empty()) v.reasons.push_back("curve is smooth");
  for (const auto& sp : loc.points) v.reasons.push_back("singularity " + sp.type.str() + " at " + pt_str(sp.p3));
}

Verdict smooth_quadric_verdict(Verdict v, const CurvePair& p, const QuadricInfo& info, const SingularLocus& loc) {
  RulingDecomposition rd;
  try {
    rd = ruling_components(bidegree_form(p, info));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnresolvedRoots) throw Error(ErrorCode::IncompleteGeometry, e.what());
    throw;
  }
  v.rulings = rd.factors;
  for (const auto& r : rd.factors) v.reasons.push_back(ruling_str(r));

  int n_a5 = 0, n_d4 = 0;
  bool only_a = true;
  for (const auto& sp : loc.points) {
    const GermType& t = sp.type;
    if (!(t.is_d4() || (t.is_a() && t.n <= 9))) return unstable(v, "singularity " + t.str() + " is not A(n<=9) or D4");
    if (t.is_d4()) {
      ++n_d4;
      only_a = false;
    }
    if (t == GermType::a(5)) ++n_a5;
  }
  bool one_point = false;
  for (const auto& r : rd.factors) {
    if (!r.profile.perfect_cube) continue;
    if (r.profile.singular_on_residual)
      return unstable(v, "a line component meets the residual curve at a unique point, singular on the residual");
    one_point = true;
  }

  // Three conics: two D4 points already use delta = 6 = p_a + 2, which forces
  // three components; without line components they are conics.
  if (rd.factors.empty() && n_d4 == 2) {
    v.family = "three conics";
    v.level = Level::KPolystableNotStable;
    v.reasons.push_back("union of three conics meeting in two D4 singularities");
    return v;
  }
  if (loc.points.size() == 2 && n_a5 == 2) {
    bool realized = true;
    for (const auto& sp : loc.points) {
      bool hit = false;
      for (const auto& r : rd.factors)
        if (r.profile.perfect_cube && contact_model(r) == sp.model) hit = true;
      realized = realized && hit;
    }
    if (realized) {
      v.family = "two A5";
      v.level = Level::KPolystableNotStable;
      v.reasons.push_back("maximally degenerate curve with two A5 singularities");
      return v;
    }
  }
  if (!only_a || one_point) {
    v.level = Level::KSemistableNotPolystable;
    if (!only_a) v.reasons.push_back("D4 singularity excludes stability");
    if (one_point) v.reasons.push_back("a line component meets the residual curve in exactly one point");
    return v;
  }
  v.level = Level::KStable;
  return v;
}

Verdict cone_verdict(Verdict v, const CurvePair& p, const QuadricInfo& info, const SingularLocus& loc, int precision) {
  const ConePoint cp = cone_point_type(p, info, precision);
  v.cone_point = cp;
  v.reasons.push_back("cone point: " + cp.str());
  if (cp.kind == ConePoint::Kind::Worse) return unstable(v, "worse than A1 at the cone point");
  int n_d4 = 0;
  for (const auto& sp : loc.points) {
    const GermType& t = sp.type;
    if (!(t.is_a() || t.is_d4())) return unstable(v, "singularity " + t.str() + " in the smooth locus of the cone");
    if (t.is_d4()) ++n_d4;
  }
  if (n_d4 == 2 && cp.kind == ConePoint::Kind::NotThroughVertex) {
    v.family = "three conics";
    v.level = Level::KPolystableNotStable;
    v.reasons.push_back("union of three conics meeting in two D4 singularities");
    return v;
  }
  if (n_d4 > 0) {
    v.level = Level::KSemistableNotPolystable;
    v.reasons.push_back("D4 singularity excludes stability");
    return v;
  }
  v.level = Level::KStable;
  return v;
}

}  // namespace

Verdict k_verdict(const CurvePair& p, const VerdictOptions& opt) {
  Verdict v;
  if (!is_complete_intersection(p)) return unstable(v, "not a complete intersection");
  const QuadricInfo info = quadric_normal_form(p.q);
  v.quadric_rank = info.rank;
  v.reasons.push_back("quadric rank " + std::to_string(info.rank));
  if (info.rank <= 2) return unstable(v, "non-normal quadric");
  if (!info.frame) throw Error(ErrorCode::IncompleteGeometry, "no normal frame for the quadric over a quadratic field");
  if (!is_reduced(p, info)) return unstable(v, "non-reduced curve");

  SingularLocus loc = singular_points(p, info, opt.assist, opt.precision);
  if (!loc.complete) {
    std::string missing;
    for (const auto& u : loc.unresolved) missing += (missing.empty() ? "" : "; ") + u;
    throw Error(ErrorCode::IncompleteGeometry, "singular points not fully resolved: " + missing);
  }
  record_points(v, loc);
  return info.rank == 4 ? smooth_quadric_verdict(v, p, info, loc) : cone_verdict(v, p, info, loc, opt.precision);
}

Verdict git_verdict(const CurvePair& p, const Rat& t, const VerdictOptions& opt) {
  const Chamber ch = chamber_of(t);
  auto search = [&] { return destabilizer_search(p, t, opt.frames, opt.bound, opt.threads); };
  if (!is_complete_intersection(p) && t <= Rat(1, 2)) {
    Verdict v = unstable(Verdict{}, "not a complete intersection: unstable for every t in [0, 1/2]");
    v.certificate = search();
    return v;
  }
  if (!ch.is_wall && ch.lo == Rat(2, 5)) {
    Verdict v = k_verdict(p, opt);
    if (v.level == Level::KUnstable) v.certificate = search();
    return v;
  }
  Verdict v;
  v.certificate = search();
  if (v.certificate) {
    v.level = Level::KUnstable;
    v.reasons.push_back("destabilizing 1-PS with mu = " + v.certificate->value.str() + " at t = " + t.str());
  } else {
    v.level = Level::Unknown;
    v.reasons.push_back("heuristic: no destabilizer with |w_i| <= " + std::to_string(opt.bound) + " at t = " +
                        t.str() + " (" + ch.str() + ")");
  }
  return v;
}

}  // namespace fanostab
