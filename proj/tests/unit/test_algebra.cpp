#include <random>

#include "doctest.h"
#include "fanostab/algebra/gcd.hpp"
#include "fanostab/algebra/legendre.hpp"
#include "fanostab/algebra/matrix.hpp"
#include "fanostab/algebra/resultant.hpp"
#include "fanostab/algebra/roots.hpp"
#include "fanostab/algebra/series.hpp"
#include "fanostab/sing/points.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fanostab;

namespace {

Rat R(long n, long d = 1) { return Rat(n) / Rat(d); }

template <class F>
void expect_error(ErrorCode code, F&& f) {
  bool thrown = false;
  try {
    f();
  } catch (const Error& e) {
    thrown = true;
    CHECK(e.code() == code);
  }
  CHECK(thrown);
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("rationals stay in lowest terms with a positive denominator") {
    const Rat a(mpz_class(6), mpz_class(-4));
    CHECK(a.str() == "-3/2");
    CHECK(a.den() == 2);
    CHECK(Rat::parse(" -10/4 ") == R(-5, 2));
    CHECK(Rat::parse("7") == R(7));
    expect_error(ErrorCode::SyntaxError, [] { Rat::parse("1/x"); });
    expect_error(ErrorCode::DivisionByZero, [] { (void)(R(1) / R(0)); });
  }

  TEST_CASE("rational arithmetic matches 128-bit cross multiplication") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
    for (int i = 0; i < 500; ++i) {
      const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
      const Rat x = R(a, b), y = R(c, d);
      CHECK(oracle::frac_equals(oracle::frac_add({a, b}, {c, d}), (x + y).raw()));
      CHECK(oracle::frac_equals(oracle::frac_mul({a, b}, {c, d}), (x * y).raw()));
      CHECK((x + y) - y == x);
      CHECK(x * y == y * x);
      CHECK((x + y) * R(3) == x * R(3) + y * R(3));
    }
  }

  TEST_CASE("quadratic numbers") {
    const QuadNum r = QuadNum::sqrt_of(R(-3));
    CHECK(r * r == QuadNum(R(-3)));
    const QuadNum z = QuadNum(R(1, 2)) + r * QuadNum(R(1, 2));
    CHECK(z * z * z == QuadNum(R(-1)));
    CHECK(z * z.inverse() == QuadNum(R(1)));
    CHECK(QuadNum::sqrt_of(R(9, 4)).is_rational());
  }

  TEST_CASE("gcd examples") {
    CHECK(poly_gcd(fx::p3("x0*x1"), fx::p3("x0*x2")) == fx::p3("x0"));
    const Poly f = fx::p3("2*x0^2*x1 - 4*x3^3 + x1*x2*x3");
    CHECK(poly_gcd(f, f) == f.monic());
    CHECK(poly_gcd(fx::p3("x0*x3 - x1*x2"), fx::p3("x0*x2^2 + x1^2*x3")).is_constant());
    expect_error(ErrorCode::DegenerateInput, [] { poly_gcd(Poly(p3_vars()), Poly(p3_vars())); });
  }

  TEST_CASE("gcd divides both inputs and recovers a planted factor") {
    fx::Rng rng(12);
    for (int i = 0; i < 40; ++i) {
      const Poly h = fx::random_form(rng, p3_vars(), fx::uniform(rng, 1, 2), 0.6);
      const Poly a = h * fx::random_form(rng, p3_vars(), 2, 0.5);
      const Poly b = h * fx::random_form(rng, p3_vars(), 1, 0.6);
      const Poly g = poly_gcd(a, b);
      Poly q(p3_vars());
      CHECK(divide_exact(a, g, &q));
      CHECK(divide_exact(b, g, &q));
      CHECK(divide_exact(g, h, &q));
    }
  }

  TEST_CASE("substitution through the Segre map") {
    const VarList& b = bidegree_vars();
    auto v = [&](int i) { return Poly::variable(b, i); };
    const std::map<std::string, Poly> segre{
        {"x0", v(0) * v(2)}, {"x1", v(0) * v(3)}, {"x2", v(1) * v(2)}, {"x3", v(1) * v(3)}};
    CHECK(substitute(fx::p3("x0*x3 - x1*x2"), segre).is_zero());
    CHECK(substitute(fx::p3("x0*x2^2 + x1^2*x3"), segre) == fx::bideg("u*v*(v*s^3 + u*w^3)"));
    const Poly f = fx::p3("x0^2 - 3*x1*x3");
    std::map<std::string, Poly> id;
    for (int i = 0; i < 4; ++i) id[p3_vars()->at(i)] = Poly::variable(p3_vars(), i);
    CHECK(substitute(f, id) == f);
    expect_error(ErrorCode::IncompleteSubstitution, [&] { substitute(f, {{"x0", v(0)}}); });
  }

  TEST_CASE("substitution is multiplicative and additive") {
    fx::Rng rng(13);
    std::vector<Poly> images;
    for (int i = 0; i < 4; ++i) images.push_back(fx::random_form(rng, bidegree_vars(), 2, 0.5));
    for (int i = 0; i < 20; ++i) {
      const Poly f = fx::random_form(rng, p3_vars(), 2, 0.5), g = fx::random_form(rng, p3_vars(), 1, 0.6);
      CHECK((f * g).substitute(images) == f.substitute(images) * g.substitute(images));
      CHECK((f + f).substitute(images) == f.substitute(images) + f.substitute(images));
    }
  }

  TEST_CASE("square completion") {
    using S = TruncSeries<Rat>;
    {
      const auto r = complete_square(S(fx::germ("y^2 - x^3"), 24));
      CHECK(r.a.is_zero());
      CHECK(r.b.poly() == fx::germ("x^3"));
    }
    {
      const auto r = complete_square(S(fx::germ("y^2 - 2*x*y + x^2 - x^4"), 24));
      CHECK(r.a.poly() == fx::germ("x"));
      CHECK(r.b.poly() == fx::germ("x^4"));
    }
    {
      const auto r = complete_square(S(fx::germ("y*(y - x^3)"), 24));
      CHECK(r.b.order() == 6);
    }
    expect_error(ErrorCode::WrongMultiplicity, [] { complete_square(S(fx::germ("y^3 + x^4"), 24)); });
    expect_error(ErrorCode::NeedsLinearPreparation, [] { complete_square(S(fx::germ("x*y + x^3"), 24)); });
  }

  TEST_CASE("square completion roundtrip") {
    fx::Rng rng(14);
    for (int i = 0; i < 30; ++i) {
      const Poly f = fx::germ("y^2") + fx::random_form(rng, fx::xy_vars(), 3, 0.5) +
                     fx::random_form(rng, fx::xy_vars(), 4, 0.5) + fx::germ("x*y - x^2");
      const TruncSeries<Rat> s(f, 16);
      const auto r = complete_square(s);
      const TruncSeries<Rat> y(fx::germ("y"), 16);
      const auto back = r.unit * (y - r.a) * (y - r.a) - r.b;
      CHECK(back.poly() == s.poly());
    }
  }

  TEST_CASE("univariate resultant agrees with the Sylvester determinant") {
    fx::Rng rng(15);
    for (int i = 0; i < 60; ++i) {
      std::vector<mpz_class> a(fx::uniform(rng, 2, 6)), b(fx::uniform(rng, 2, 6));
      std::vector<Rat> ar, br;
      for (auto& c : a) ar.emplace_back(c = fx::uniform(rng, -5, 5));
      for (auto& c : b) br.emplace_back(c = fx::uniform(rng, -5, 5));
      if (a.back() == 0) a.back() = 1, ar.back() = Rat(1);
      if (b.back() == 0) b.back() = -1, br.back() = Rat(-1);
      CHECK(resultant(RPoly(ar), RPoly(br)) == Rat(oracle::sylvester_resultant(a, b)));
    }
  }

  TEST_CASE("bivariate resultant agrees with Sylvester determinants at specializations") {
    fx::Rng rng(16);
    for (int i = 0; i < 20; ++i) {
      Poly a(fx::xy_vars()), b(fx::xy_vars());
      const int da = fx::uniform(rng, 1, 4), db = fx::uniform(rng, 1, 4);
      for (int j = 0; j <= da; ++j)
        for (int k = 0; k <= 3; ++k) a.add_term({k, j}, Rat(fx::uniform(rng, -3, 3)));
      for (int j = 0; j <= db; ++j)
        for (int k = 0; k <= 3; ++k) b.add_term({k, j}, Rat(fx::uniform(rng, -3, 3)));
      if (a.degree(1) < 1 || b.degree(1) < 1) continue;
      const RPoly r = resultant_y(a, b);
      for (long x = -3; x <= 3; ++x) {
        auto coeffs = [&](const Poly& p) {
          std::vector<mpz_class> c(p.degree(1) + 1, 0);
          for (const auto& [e, v] : p.terms()) c[e[1]] += (v * Rat(x).pow(e[0])).num();
          return c;
        };
        CHECK(r.eval(Rat(x)) == Rat(oracle::sylvester_resultant(coeffs(a), coeffs(b))));
      }
    }
  }

  TEST_CASE("roots") {
    const RPoly p = RPoly({R(-6), R(11), R(-6), R(1)});  // (X-1)(X-2)(X-3)
    CHECK(rational_roots(p) == std::vector<Rat>{R(1), R(2), R(3)});
    const FieldRoots fr = field_roots(QUPoly({QuadNum(R(1)), QuadNum(R(1)), QuadNum(R(1))}));  // X^2+X+1
    REQUIRE(fr.roots.size() == 2);
    for (const auto& z : fr.roots) CHECK(z * z + z + QuadNum(R(1)) == QuadNum(R(0)));
    const FieldRoots cubic = field_roots(QUPoly({QuadNum(R(-2)), QuadNum(R(0)), QuadNum(R(0)), QuadNum(R(1))}));
    CHECK(cubic.roots.empty());
    CHECK(cubic.unresolved.size() == 1);
  }

  TEST_CASE("matrices") {
    const RMatrix m = RMatrix::from_rows({{R(2), R(1), R(0)}, {R(1), R(3), R(1)}, {R(0), R(1), R(4)}});
    std::vector<std::vector<mpq_class>> raw(3, std::vector<mpq_class>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) raw[i][j] = m(i, j).raw();
    CHECK(m.det() == Rat(oracle::determinant(raw)));
    CHECK(m * m.inverse() == RMatrix::identity(3));
    CHECK(RMatrix::from_rows({{R(1), R(2)}, {R(2), R(4)}}).rank() == 1);
  }

  TEST_CASE("ternary forms") {
    const auto s = solve_ternary(1, 1, -2);  // x^2 + y^2 = 2 z^2
    REQUIRE(s);
    const auto& v = *s;
    CHECK(v[0] * v[0] + v[1] * v[1] - 2 * v[2] * v[2] == 0);
    CHECK(!solve_ternary(1, 1, 1));
  }
}
