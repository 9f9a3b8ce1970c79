#include "doctest.h"
#include "fanostab/io/parse.hpp"
#include "fanostab/io/report.hpp"
#include "fixtures.hpp"
#include "json.hpp"

using namespace fanostab;

namespace {

ErrorCode parse_error(const std::string& text, Convention c = Convention::P3, int degree = -1) {
  try {
    parse_poly(text, c, degree);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed: " << text);
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("parsing examples") {
    const Poly q = parse_poly("x0*x3 - x1*x2", Convention::P3, 2).poly;
    CHECK(q.size() == 2);
    CHECK(q.str() == "x0*x3 - x1*x2");
    const Poly g = parse_poly("x0*x2^2 + x1^2*x3", Convention::P3, 3).poly;
    CHECK(g == fx::c2a5().g);
    CHECK(parse_poly("x0 x2^2+x1^2x3", Convention::P3).poly == g);
    CHECK(parse_poly("-1/2*x0^2 + 3/4 x1*x4", Convention::P4).poly.str() == "-1/2*x0^2 + 3/4*x1*x4");
    CHECK(parse_poly("(u + v)^2 * s*w", Convention::Bidegree).poly.str() == "u^2*s*w + 2*u*v*s*w + v^2*s*w");
    CHECK(parse_poly("2(x0 - x1)", Convention::P3).poly == fx::p3("2*x0 - 2*x1"));
    CHECK(parse_poly("-(-x0)", Convention::P3).poly == fx::p3("x0"));
  }

  TEST_CASE("parsing errors") {
    CHECK(parse_error("x0^2 + x1", Convention::P3, 2) == ErrorCode::DegreeMismatch);
    CHECK(parse_error("x0^3", Convention::P3, 2) == ErrorCode::DegreeMismatch);
    CHECK(parse_error("u^2*s", Convention::Bidegree, 3) == ErrorCode::DegreeMismatch);
    CHECK(parse_error("x5") == ErrorCode::SyntaxError);
    CHECK(parse_error("x4", Convention::P3) == ErrorCode::SyntaxError);
    CHECK(parse_error("x0 +") == ErrorCode::SyntaxError);
    CHECK(parse_error("(x0") == ErrorCode::SyntaxError);
    CHECK(parse_error("x0^") == ErrorCode::SyntaxError);
    CHECK(parse_error("1/0") == ErrorCode::SyntaxError);
    CHECK(parse_error("") == ErrorCode::SyntaxError);
    try {
      parse_poly("x0 + * x1", Convention::P3);
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }
  }

  TEST_CASE("batch runs") {
    const RunReport r = run_batch(R"([{"q": "x0*x3 - x1*x2", "g": "x0*x2^2 + x1^2*x3"}])");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.json);
    CHECK(j["results"][0]["verdict"] == "KPolystableNotStable");
    CHECK(j["results"][0]["certificate"].is_null());

    const RunReport e = run_batch("[]");
    CHECK(e.exit_code == 0);
    CHECK(nlohmann::json::parse(e.json)["results"].empty());

    const RunReport n = run_batch(R"([{"q": "x0*x1", "g": "x2^3 + x3^3"}])");
    const auto nj = nlohmann::json::parse(n.json);
    CHECK(nj["results"][0]["verdict"] == "KUnstable");
    CHECK(nj["results"][0]["reasons"].dump().find("non-normal quadric") != std::string::npos);
  }

  TEST_CASE("batch input errors") {
    CHECK(run_batch("{").exit_code == 1);
    CHECK(run_batch("{}").exit_code == 1);
    CHECK(run_batch(R"([{"q": "x0*x1"}])").exit_code == 1);
    CHECK(run_batch(R"([{"q": "x0^2 + x1", "g": "x0^3"}])").exit_code == 1);
    CHECK(run_batch(R"([{"q": "x0*x3-x1*x2", "g": "x0^3+x3^3", "points": [[1, 2]]}])").exit_code == 1);
    CHECK(run_batch_file("/nonexistent/input.json").exit_code == 1);
  }

  TEST_CASE("batch GIT mode and certificates") {
    BatchOptions o;
    o.t = Rat(22) / Rat(51);
    const RunReport r = run_batch(R"([{"q": "x1*x2", "g": "x0^3 + x0^2*x3 + x0*x3^2 + x3^3"}])", o);
    const auto j = nlohmann::json::parse(r.json);
    CHECK(j["mode"] == "git");
    CHECK(j["t"] == "22/51");
    CHECK(j["results"][0]["verdict"] == "KUnstable");
    CHECK(j["results"][0]["certificate"]["mu"]["affine"] == "3t-2");
  }

  TEST_CASE("batch output is deterministic across thread counts") {
    const std::string input = R"J([
      {"q": "x0*x3 - x1*x2", "g": "x0*x2^2 + x1^2*x3"},
      {"bidegree": "(u*s - v*w)*(u*s - 2*v*w)*(u*s - 3*v*w)"},
      {"q": "x0*x1", "g": "x2^3 + x3^3"},
      {"q": "x1*x3 - x2^2", "g": "x0^2*x2 + x1^3 + x3^3"},
      {"q": "x0^2", "g": "x1^3"}
    ])J";
    BatchOptions one, four;
    four.threads = 4;
    const RunReport a = run_batch(input, one), b = run_batch(input, one), c = run_batch(input, four);
    CHECK(a.json == b.json);
    CHECK(a.json == c.json);
    CHECK(a.json.find("time_ms") == std::string::npos);
    CHECK(a.json.find("fnv1a:") != std::string::npos);
  }

  TEST_CASE("hash") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  }
}
