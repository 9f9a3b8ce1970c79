#include "doctest.h"
#include "fanostab/algebra/gcd.hpp"
#include "fanostab/verdict/sarkisov.hpp"
#include "fanostab/verdict/verdict.hpp"
#include "fixtures.hpp"

using namespace fanostab;

namespace {

Rat R(long n, long d = 1) { return Rat(n) / Rat(d); }

bool has_reason(const Verdict& v, const std::string& text) {
  for (const auto& r : v.reasons)
    if (r.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_SUITE("verdict") {
  TEST_CASE("two A5 curve is polystable") {
    const Verdict v = k_verdict(fx::c2a5());
    CHECK(v.level == Level::KPolystableNotStable);
    CHECK(v.family == "two A5");
    CHECK(v.singularities.size() == 2);
    REQUIRE(v.rulings.size() == 2);
    for (const auto& r : v.rulings) CHECK(r.profile.perfect_cube);
  }

  TEST_CASE("three conics are polystable") {
    const Verdict v = k_verdict(fx::three_conics());
    CHECK(v.level == Level::KPolystableNotStable);
    CHECK(v.family == "three conics");
    CHECK(v.rulings.empty());
  }

  TEST_CASE("non-normal quadric") {
    const Verdict v = k_verdict(fx::rank2());
    CHECK(v.level == Level::KUnstable);
    CHECK(has_reason(v, "non-normal quadric"));
    CHECK(v.family.empty());
  }

  TEST_CASE("not a complete intersection") {
    const Verdict v = k_verdict(fx::pair("x0*x3 - x1*x2", "x0*(x0*x3 - x1*x2) + x1*x2*x3 - x0*x3^2"));
    CHECK(v.level == Level::KUnstable);
    CHECK(has_reason(v, "not a complete intersection"));
  }

  TEST_CASE("non-reduced curve") {
    const Verdict v = k_verdict(pair_from_bidegree(fx::bideg("u^2*v*(s^3 + w^3)")));
    CHECK(v.level == Level::KUnstable);
    CHECK(has_reason(v, "non-reduced"));
  }

  TEST_CASE("smooth curves are stable") {
    CHECK(k_verdict(fx::smooth_curve()).level == Level::KStable);
    CHECK(k_verdict(fx::nine_node_grid()).level == Level::KStable);
  }

  TEST_CASE("a single D4 point gives strict semistability") {
    // Three conics through (0:1)x(1:0) with distinct tangents; every other
    // crossing is a rational node.
    const Verdict v = k_verdict(pair_from_bidegree(fx::bideg("(u*s - v*w)*(u*s - 2*v*w)*(u*s + u*w + v*w)")));
    CHECK(v.level == Level::KSemistableNotPolystable);
    CHECK(v.family.empty());
    int d4 = 0, a1 = 0;
    for (const auto& s : v.singularities) {
      d4 += s.type.str() == "D4";
      a1 += s.type.str() == "A(1)";
    }
    CHECK(d4 == 1);
    CHECK(a1 == 3);
  }

  TEST_CASE("ruling with cube contact at a singular point of the residual") {
    // The residual has a node on u = 0 where the ruling meets it to order 3;
    // the union is then also worse than D4 there.
    const Verdict v = k_verdict(pair_from_bidegree(fx::bideg("u*(v^2*s^3 + u^2*w^3 + u*v*s*w^2)")));
    CHECK(v.level == Level::KUnstable);
    bool ruling_reason = false;
    for (const auto& r : v.reasons) ruling_reason |= r.find("singular on the residual") != std::string::npos;
    CHECK(ruling_reason);
  }

  TEST_CASE("cone cases") {
    CHECK(k_verdict(fx::cone_a1()).level == Level::KStable);
    const Verdict w = k_verdict(fx::cone_worse());
    CHECK(w.level == Level::KUnstable);
    REQUIRE(w.cone_point);
    CHECK(w.cone_point->kind == ConePoint::Kind::Worse);
  }

  TEST_CASE("level ordering") {
    CHECK(is_semistable(Level::KStable));
    CHECK(is_polystable(Level::KStable));
    CHECK(is_semistable(Level::KPolystableNotStable));
    CHECK(is_polystable(Level::KPolystableNotStable));
    CHECK(is_semistable(Level::KSemistableNotPolystable));
    CHECK(!is_polystable(Level::KSemistableNotPolystable));
    CHECK(!is_semistable(Level::KUnstable));
    CHECK(!is_semistable(Level::Unknown));
  }

  TEST_CASE("GIT verdicts") {
    CHECK(git_verdict(fx::c2a5(), R(22, 51)).level == Level::KPolystableNotStable);
    const Verdict d = git_verdict(fx::destabilized_pair(), R(22, 51));
    CHECK(d.level == Level::KUnstable);
    REQUIRE(d.certificate);
    CHECK(d.certificate->value.at(R(22, 51)).sign() < 0);
    const CurvePair shared = fx::pair("x0*x1", "x0*x2^2 + x0*x3^2 + x0*x1*x2");
    CHECK(git_verdict(shared, R(1, 4)).level == Level::KUnstable);
    const Verdict u = git_verdict(fx::smooth_curve(), R(1, 10), {kDefaultPrecision, {}, 2});
    CHECK(u.level == Level::Unknown);
    CHECK(has_reason(u, "heuristic"));
    bool thrown = false;
    try {
      git_verdict(fx::c2a5(), R(7, 10));
    } catch (const Error& e) {
      thrown = e.code() == ErrorCode::OutOfRange;
    }
    CHECK(thrown);
  }

  TEST_CASE("search certificates imply instability") {
    // Consistency: a certificate at t0 never coexists with a stable verdict.
    for (const CurvePair& p : {fx::destabilized_pair(), fx::rank2(), fx::cone_worse(), fx::c2a5()}) {
      const auto c = destabilizer_search(p, R(22, 51), {}, 3);
      if (c) CHECK(k_verdict(p).level == Level::KUnstable);
    }
  }

  TEST_CASE("Sarkisov cubic") {
    const CurvePair p = fx::pair("x0*x3 - x1*x2", "x0*x2^2 + x1^2*x3");
    const CubicThreefold c = sarkisov_cubic(p);
    CHECK(c.f == fx::p4("x0*(x1*x4 - x2*x3) - (x1*x3^2 + x2^2*x4)"));
    CHECK(c.integral);
    CHECK(extract_pair(c.f, {R(1), R(0), R(0), R(0), R(0)}) == p);
    const CubicThreefold r = sarkisov_cubic(fx::pair("x0*x1", "x0*x2*x3"));
    CHECK(!r.integral);
    CHECK(!poly_gcd(r.f, r.f.derivative(0)).is_constant());
  }

  TEST_CASE("Sarkisov inverse at another vertex") {
    const CurvePair p = fx::smooth_curve();
    const Poly f = sarkisov_cubic(p).f;
    // Move the double point to [1:1:0:0:0] by x0 -> x0 - x1.
    const VarList& v = p4_vars();
    std::vector<Poly> img;
    for (int i = 0; i < 5; ++i) img.push_back(Poly::variable(v, i));
    img[1] = img[1] - Poly::variable(v, 0);
    const Poly moved = f.substitute(img);
    const CurvePair back = extract_pair(moved, {R(1), R(1), R(0), R(0), R(0)});
    CHECK(is_complete_intersection(back));
    bool thrown = false;
    try {
      extract_pair(f, {R(0), R(1), R(0), R(0), R(0)});
    } catch (const Error& e) {
      thrown = e.code() == ErrorCode::NotADoublePoint;
    }
    CHECK(thrown);
  }
}
