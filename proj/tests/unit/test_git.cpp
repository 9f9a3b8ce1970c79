#include "doctest.h"
#include "fanostab/git/search.hpp"
#include "fanostab/git/span.hpp"
#include "fanostab/git/walls.hpp"
#include "fixtures.hpp"

using namespace fanostab;

namespace {

Rat R(long n, long d = 1) { return Rat(n) / Rat(d); }

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

// Lowest weight among the monomials of f (the oracle for pairs whose lowest
// monomial is visibly outside q*(linear forms)).
long min_weight(const Poly& f, const std::vector<long>& w) {
  long m = 1L << 30;
  for (const auto& [e, c] : f.terms()) m = std::min(m, weight(w, e));
  return m;
}

}  // namespace

TEST_SUITE("git") {
  TEST_CASE("pair validation") {
    CHECK(error_of([] { CurvePair::make(fx::p3("x0^3"), fx::p3("x1^3")); }) == ErrorCode::WrongDegree);
    CHECK(error_of([] { CurvePair::make(fx::p3("x0^2"), Poly(p3_vars())); }) == ErrorCode::DegenerateInput);
  }

  TEST_CASE("complete intersections") {
    CHECK(is_complete_intersection(fx::c2a5()));
    CHECK(!is_complete_intersection(fx::pair("x0*x1", "x0*x2*x3")));
    CHECK(!is_complete_intersection(fx::pair("x1*x3 - x2^2", "x0*x1*x3 - x0*x2^2")));
  }

  TEST_CASE("index of the destabilized pair") {
    const HMValue v = hm_index(fx::destabilized_pair(), OnePS::diagonal({-1, 1, 1, -1}));
    CHECK(v.constant == R(-2));
    CHECK(v.slope == R(3));
    CHECK(v.str() == "3t-2");
    CHECK(v.at(R(22, 51)) == R(-36, 51));
    // Independent weight count: q = x1 x2 has weight 2, the cubic sits in weight -3.
    CHECK(-weight({-1, 1, 1, -1}, {0, 1, 1, 0}) == -2);
    CHECK(-min_weight(fx::destabilized_pair().g, {-1, 1, 1, -1}) == 3);
  }

  TEST_CASE("index of the cone pair") {
    const std::vector<long> w{-9, -1, 3, 7};
    const HMValue v = hm_index(fx::cone_hm(), OnePS::diagonal(w));
    CHECK(v == HMValue{R(-6), R(11)});
    CHECK(v.str() == "11t-6");
    CHECK(v.at(R(22, 51)).sign() < 0);
    // Direct computation: x1 x3 and x2^2 both weigh 6; x0 x1^2 weighs -11 and is
    // not divisible by x1 x3 or x2^2.
    CHECK(-min_weight(fx::cone_hm().q, w) == -6);
    CHECK(-min_weight(fx::cone_hm().g, w) == 11);
  }

  TEST_CASE("trivial 1-PS") {
    const HMValue v = hm_index(fx::c2a5(), OnePS::diagonal({0, 0, 0, 0}));
    CHECK(v == HMValue{R(0), R(0)});
    CHECK(one_ps_limit(fx::c2a5(), OnePS::diagonal({0, 0, 0, 0})) == fx::c2a5());
  }

  TEST_CASE("index errors") {
    CHECK(error_of([] { hm_index(fx::c2a5(), OnePS::diagonal({-1, 1, 1, -1})); }) == ErrorCode::NotSemiInvariant);
    CHECK(error_of([] { hm_index(fx::pair("x1*x3 - x2^2", "x0*x1*x3 - x0*x2^2"), OnePS::diagonal({0, 1, 0, -1})); }) ==
          ErrorCode::NotInFiber);
    CHECK(error_of([] { OnePS::diagonal({1, 1, 0, 0}); }) == ErrorCode::InvalidInput);
    CHECK(error_of([] { OnePS::make(RMatrix(4, 4), {1, -1, 0, 0}); }) == ErrorCode::InvalidInput);
  }

  TEST_CASE("general index agrees with the semi-invariant one") {
    const auto v = hm_index_general(fx::destabilized_pair(), OnePS::diagonal({-1, 1, 1, -1}));
    REQUIRE(v);
    CHECK(*v == HMValue{R(-2), R(3)});
    CHECK(!hm_index_general(fx::pair("x1*x3 - x2^2", "x0*x1*x3 - x0*x2^2"), OnePS::diagonal({0, 1, 0, -1})));
  }

  TEST_CASE("limits keep the largest weights") {
    const CurvePair p = fx::pair("x0^2 + x0*x3", "x1^3 + x0*x1*x3");
    const CurvePair l = one_ps_limit(p, OnePS::diagonal({1, 0, 0, -1}));
    CHECK(l.q == fx::p3("x0^2"));
    CHECK(l.g == fx::p3("x1^3 + x0*x1*x3"));
    // Weights concentrated on x0 make both limits divisible by x0.
    const CurvePair m = one_ps_limit(fx::pair("x0*x1", "x0*x2^2 + x1*x3^2"), OnePS::diagonal({3, -1, -1, -1}));
    CHECK(m.g == fx::p3("x0*x2^2"));
    CHECK(!is_complete_intersection(m));
  }

  TEST_CASE("permuted frames give the same index") {
    const std::vector<int> perm{3, 1, 2, 0};
    RMatrix P(4, 4);
    for (int i = 0; i < 4; ++i) P(perm[i], i) = Rat(1);
    const CurvePair p = fx::cone_hm();
    const std::vector<long> w{-9, -1, 3, 7};
    CHECK(hm_index(p, OnePS::diagonal(w)) == hm_index(transform(p, P.inverse()), OnePS::make(P, w)));
  }

  TEST_CASE("span reduction") {
    const auto gens = q_times_linears(fx::p3("x0*x3 - x1*x2"));
    CHECK(gens.size() == 4);
    CHECK(express_in_span(fx::p3("x0^2*x3 - x0*x1*x2"), gens));
    CHECK(!express_in_span(fx::p3("x0^3"), gens));
  }

  TEST_CASE("weight candidates are primitive, balanced and ordered") {
    const auto c = weight_candidates(2);
    CHECK(!c.empty());
    long prev_linf = 0;
    for (const auto& w : c) {
      long s = 0, g = 0, linf = 0;
      for (long x : w) {
        s += x;
        g = std::gcd(g, std::labs(x));
        linf = std::max(linf, std::labs(x));
      }
      CHECK(s == 0);
      CHECK(g == 1);
      CHECK(linf <= 2);
      CHECK(linf >= prev_linf);
      prev_linf = linf;
    }
  }

  TEST_CASE("search finds the destabilizer") {
    const auto c = destabilizer_search(fx::destabilized_pair(), R(22, 51), {}, 3);
    REQUIRE(c);
    CHECK(c->ps.weights == std::vector<long>{-1, 1, 1, -1});
    CHECK(c->value.at(R(22, 51)) == R(3) * R(22, 51) - R(2));
    // Thread count does not change the answer.
    const auto c4 = destabilizer_search(fx::destabilized_pair(), R(22, 51), {}, 3, 4);
    REQUIRE(c4);
    CHECK(c4->ps.weights == c->ps.weights);
  }

  TEST_CASE("search finds nothing on a smooth curve") {
    CHECK(!destabilizer_search(fx::smooth_curve(), R(22, 51), {}, 2));
  }

  TEST_CASE("search destabilizes pairs with a common factor at every slope") {
    const CurvePair p = fx::pair("x0*x1", "x0*x2^2 + x0*x3^2 + x0*x1*x2");
    for (const Rat& t : {R(0), R(1, 4), R(22, 51), R(1, 2)}) CHECK(destabilizer_search(p, t, {}, 3));
  }

  TEST_CASE("walls and chambers") {
    CHECK(vgit_walls() == std::vector<Rat>{R(0), R(2, 9), R(2, 5), R(1, 2), R(2, 3)});
    CHECK(chamber_of(R(22, 51)).str() == "Chamber(2/5, 1/2)");
    CHECK(chamber_of(R(2, 9)).str() == "Wall(T1=2/9)");
    CHECK(chamber_of(R(2, 9)).is_wall);
    CHECK(error_of([] { chamber_of(R(7, 10)); }) == ErrorCode::OutOfRange);
    CHECK(error_of([] { chamber_of(R(-1, 10)); }) == ErrorCode::OutOfRange);
  }

  TEST_CASE("Hassett-Keel map") {
    CHECK(hk_map(R(8, 17), HKDirection::AlphaToT) == R(0));
    CHECK(hk_map(R(5, 9), HKDirection::AlphaToT) == R(2, 3));
    CHECK(hk_map(R(22, 51), HKDirection::TToAlpha) == R(127, 252));
    // Solve 22 (33 a - 14) = 51 (34 a - 16) for a directly.
    CHECK(R(51 * 16 - 22 * 14, 51 * 34 - 22 * 33) == R(127, 252));
    CHECK(error_of([] { hk_map(R(1, 3), HKDirection::AlphaToT); }) == ErrorCode::OutOfRange);
    CHECK(error_of([] { hk_map(R(1), HKDirection::TToAlpha); }) == ErrorCode::OutOfRange);
    for (long n = 0; n <= 20; ++n) {
      const Rat a = R(8, 17) + (R(5, 9) - R(8, 17)) * R(n, 20);
      CHECK(hk_map(hk_map(a, HKDirection::AlphaToT), HKDirection::TToAlpha) == a);
    }
  }
}
