#include <benchmark/benchmark.h>

#include "fanostab/chow/chow.hpp"
#include "fanostab/git/search.hpp"
#include "fanostab/io/parse.hpp"
#include "fanostab/k3/lattice.hpp"
#include "fanostab/sing/germ.hpp"
#include "fanostab/verdict/verdict.hpp"

using namespace fanostab;

namespace {

CurvePair pair(const char* q, const char* g) {
  return CurvePair::make(parse_poly(q, Convention::P3, 2).poly, parse_poly(g, Convention::P3, 3).poly);
}

void BM_CmClass(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cm_class());
}
BENCHMARK(BM_CmClass);

// A germ y^2 = x^(n+1) with a unit factor.
void BM_ClassifyGerm(benchmark::State& state) {
  static const VarList xy = make_vars({"x", "y"});
  const int n = static_cast<int>(state.range(0));
  const Poly p = parse_poly("(1 + x0 + x1^2)*x1^2 - x0^" + std::to_string(n + 1), Convention::P3).poly;
  Poly f(xy);
  for (const auto& [e, c] : p.terms()) f.add_term({e[0], e[1]}, c);
  for (auto _ : state) benchmark::DoNotOptimize(classify_germ(f));
}
BENCHMARK(BM_ClassifyGerm)->Arg(1)->Arg(5)->Arg(9);

void BM_SearchHit(benchmark::State& state) {
  const CurvePair p = pair("x1*x2", "x0^3 + x0^2*x3 + x0*x3^2 + x3^3");
  for (auto _ : state) benchmark::DoNotOptimize(destabilizer_search(p, Rat(22, 51)));
}
BENCHMARK(BM_SearchHit);

// Exhausts the box on a smooth curve; cost grows with the bound.
void BM_SearchExhaust(benchmark::State& state) {
  const CurvePair p = pair("x0*x3 - x1*x2",
                           "x0^3 + 2*x1^3 - x2^3 + 3*x3^3 + x0*x1*x2 - x1*x2*x3 + 5*x0^2*x3");
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(destabilizer_search(p, Rat(22, 51), {}, bound));
}
BENCHMARK(BM_SearchExhaust)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VerdictTwoA5(benchmark::State& state) {
  const CurvePair p = pair("x0*x3 - x1*x2", "x0*x2^2 + x1^2*x3");
  for (auto _ : state) benchmark::DoNotOptimize(k_verdict(p));
}
BENCHMARK(BM_VerdictTwoA5)->Unit(benchmark::kMillisecond);

void BM_Unigonal(benchmark::State& state) {
  const int scale = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unigonal_obstruction(UnigonalCase::A1, scale));
}
BENCHMARK(BM_Unigonal)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
