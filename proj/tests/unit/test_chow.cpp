#include "doctest.h"
#include "fanostab/chow/chow.hpp"
#include "fanostab/git/walls.hpp"

using namespace fanostab;

namespace {

ChowClass cls(long xi, long eta) { return Rat(xi) * ChowClass::xi() + Rat(eta) * ChowClass::eta(); }
const ChowClass h = ChowClass::h(), xi = ChowClass::xi(), eta = ChowClass::eta();

}  // namespace

TEST_SUITE("chow") {
  TEST_CASE("h^4 vanishes") {
    CHECK(h.pow(4).is_zero());
    CHECK(!h.pow(3).is_zero());
  }

  TEST_CASE("pushforward along P^3") {
    CHECK(push_p3(h.pow(3)) == ChowClass::constant(Rat(1)));
    const ChowClass y = (Rat(3) * h + xi) * (Rat(2) * h + eta);
    CHECK(push_p3(h.pow(2) * y) == cls(2, 3));
    CHECK(push_p3(h * (Rat(5) * h + xi + eta) * y) == cls(16, 21));
    CHECK(push_p3(h.pow(2)).is_zero());
  }

  TEST_CASE("blow-up pushforwards") {
    CHECK(blowup_push(4, 0).is_zero());
    CHECK(blowup_push(3, 1).is_zero());
    CHECK(blowup_push(2, 2) == cls(-2, -3));
    CHECK(blowup_push(1, 3) == cls(-16, -21));
    CHECK(blowup_push(0, 4) == cls(-86, -99));
    bool thrown = false;
    try {
      blowup_push(2, 3);
    } catch (const Error& e) {
      thrown = e.code() == ErrorCode::WrongDegree;
    }
    CHECK(thrown);
  }

  TEST_CASE("pushforward is linear in the blow-up data") {
    // Scaling the center class scales every E^b pushforward with b >= 2.
    BlowupData d = BlowupData::standard();
    BlowupData d2 = d;
    d2.center = Rat(2) * d.center;
    CHECK(blowup_push(2, 2, d2) == Rat(2) * blowup_push(2, 2, d));
    CHECK(push_p3(Rat(3) * h.pow(3) + Rat(5) * h.pow(3) * xi) == ChowClass::constant(Rat(3)) + Rat(5) * xi);
  }

  TEST_CASE("CM class and its slope") {
    CHECK(cm_class() == cls(22, 51));
    CHECK(cm_class().str() == "22*xi + 51*eta");
    // -(-(86, 99) + 16 (16, 21) - 96 (2, 3)), with plain integers.
    CHECK(-(-86 + 16 * 16 - 96 * 2) == 22);
    CHECK(-(-99 + 16 * 21 - 96 * 3) == 51);
    CHECK(cm_class() == -(blowup_push(0, 4) - Rat(16) * blowup_push(1, 3) + Rat(96) * blowup_push(2, 2) -
                          Rat(256) * blowup_push(3, 1) + Rat(256) * blowup_push(4, 0)));
    CHECK(cm_class(BlowupData::standard()) == cm_class());
    const Rat t0 = slope(cm_class());
    CHECK(t0 == Rat(22) / Rat(51));
    CHECK(chamber_of(t0).str() == "Chamber(2/5, 1/2)");
  }

  TEST_CASE("projective bundle constants") {
    const PEConstants pe = pe_constants();
    CHECK(pe.rank == 16);
    CHECK(pe.c1 == Rat(4) * eta);
    CHECK(pe.omega == cls(-16, -14));
    CHECK(pe.ample_lo == Rat(0));
    CHECK(pe.ample_hi == Rat(1) / Rat(2));
  }
}
