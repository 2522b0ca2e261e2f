#include <benchmark/benchmark.h>

#include "ahs/asymptotics.hpp"
#include "ahs/combinatorics.hpp"
#include "ahs/heights.hpp"
#include "ahs/hilbert.hpp"
#include "ahs/linalg.hpp"
#include "ahs/points.hpp"

using namespace ahs;

namespace {

void BM_CBruteforce(benchmark::State& state) {
  const auto D = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(c_bruteforce(3, D, 128));
}
BENCHMARK(BM_CBruteforce)->Arg(8)->Arg(16)->Arg(32);

void BM_QExact(benchmark::State& state) {
  const auto D = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_exact(3, D, 128));
}
BENCHMARK(BM_QExact)->Arg(40)->Arg(200)->Arg(1000);

void BM_CBounds(benchmark::State& state) {
  const EpsilonSplit eps;
  resolve_c_sandwich(eps, 128);
  const auto D = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(c_bounds(3, D, eps, 128));
}
BENCHMARK(BM_CBounds)->Arg(20)->Arg(60);

void BM_LogFactorialPrecision(benchmark::State& state) {
  const auto prec = static_cast<Precision>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(log_factorial(10000, prec));
}
BENCHMARK(BM_LogFactorialPrecision)->Arg(128)->Arg(512)->Arg(2048);

void BM_GramDeterminant(benchmark::State& state) {
  HomogPoly f = parse_poly("x0^3+x1^3+2*x2^3", 2);
  const auto D = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gram_det_shifted(f, D));
}
BENCHMARK(BM_GramDeterminant)->Arg(4)->Arg(6)->Arg(8);

void BM_SandwichCheck(benchmark::State& state) {
  HomogPoly f = parse_poly("x0^2+x1^2-x2^2", 2);
  const auto D = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_theorem_sandwich(f, D, 128, SandwichVariant::kCovolume));
}
BENCHMARK(BM_SandwichCheck)->Arg(3)->Arg(6);

void BM_JiaJiao(benchmark::State& state) {
  const auto D = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_jiajiao(3, D, D, 128));
}
BENCHMARK(BM_JiaJiao)->Arg(4)->Arg(8);

void BM_EnumeratePoints(benchmark::State& state) {
  HomogPoly f = parse_poly("x0^2+x1^2-x2^2", 2);
  const Rational B(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_points(f, B));
}
BENCHMARK(BM_EnumeratePoints)->Arg(10)->Arg(40)->Arg(80);

void BM_Kernel(benchmark::State& state) {
  HomogPoly f = parse_poly("x0^2+x1^2-x2^2", 2);
  PointSet s = enumerate_points(f, 30);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_rational(monomial_eval_matrix(s.points, 2, 4)));
}
BENCHMARK(BM_Kernel);

}  // namespace
BENCHMARK_MAIN();
