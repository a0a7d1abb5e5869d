#include <benchmark/benchmark.h>

#include "symrad/bipoly.hpp"
#include "symrad/numverify.hpp"
#include "symrad/parse.hpp"
#include "symrad/radical.hpp"
#include "symrad/reduce.hpp"
#include "symrad/symmetry.hpp"
#include "symrad_tools/driver.hpp"

namespace {

using namespace symrad;

BiPoly poly(const std::string& text) { return ast_to_bipoly(parse_expression(text), kXY); }

void BM_Resultant(benchmark::State& state) {
  const BiPoly p = poly("x^2+y^2-a");
  const BiPoly q = poly("x^3+y^3-b");
  for (auto _ : state) benchmark::DoNotOptimize(resultant(p, q, "y"));
}
BENCHMARK(BM_Resultant);

void BM_ToElementary(benchmark::State& state) {
  const BiPoly p = poly("x^" + std::to_string(state.range(0)) + "+y^" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(to_elementary(p));
}
BENCHMARK(BM_ToElementary)->Arg(4)->Arg(8)->Arg(12);

void BM_PowerSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(power_sum(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PowerSum)->Arg(8)->Arg(16);

void BM_SolveQuartic(benchmark::State& state) {
  const BiPoly p = poly("x^4+a*x^3-2*x+b");
  for (auto _ : state) benchmark::DoNotOptimize(solve_univariate_radicals(p));
}
BENCHMARK(BM_SolveQuartic);

void BM_SymmetricSystem(benchmark::State& state) {
  const BiPoly p = poly("x^2+y^2-a");
  const BiPoly q = poly("x^3+y^3-b");
  for (auto _ : state) benchmark::DoNotOptimize(solve_symmetric_system(p, q));
}
BENCHMARK(BM_SymmetricSystem);

void BM_NumericRoots(benchmark::State& state) {
  std::vector<Complex> c(static_cast<std::size_t>(state.range(0)) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Complex(Real(static_cast<long>(i % 5) - 2));
  c.back() = Complex(Real(1));
  const NumPoly p(c);
  for (auto _ : state) benchmark::DoNotOptimize(numeric_roots(p, 15));
}
BENCHMARK(BM_NumericRoots)->Arg(6)->Arg(9);

void BM_SolveProblemOne(benchmark::State& state) {
  cli::SolveOptions options;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cli::cmd_solve("(a-x^2)^3=(b-x^3)^2", options));
  }
}
BENCHMARK(BM_SolveProblemOne)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
