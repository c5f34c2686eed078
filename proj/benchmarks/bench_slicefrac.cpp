#include <benchmark/benchmark.h>

#include "slicefrac/contfrac.hpp"
#include "slicefrac/heaps.hpp"
#include "slicefrac/maps.hpp"
#include "slicefrac/slices.hpp"

namespace {

void BM_BiPolyMul(benchmark::State& st) {
  const int cap = int(st.range(0));
  const sf::BiPoly x = (sf::BiPoly::constant(cap, 1) - sf::BiPoly::tb(cap) - sf::BiPoly::tw(cap)).inv();
  for (auto _ : st) benchmark::DoNotOptimize(x * x);
}
BENCHMARK(BM_BiPolyMul)->Arg(8)->Arg(16)->Arg(32);

void BM_SolveBW(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sf::solve_bw(int(st.range(0))));
}
BENCHMARK(BM_SolveBW)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SolveY(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sf::solve_y(int(st.range(0))));
}
BENCHMARK(BM_SolveY)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_StieltjesExtract(benchmark::State& st) {
  const sf::SliceFamily bw = sf::solve_bw(11);
  std::vector<sf::BiPoly> F;
  for (int n = 0; n <= 4; ++n) F.push_back(sf::f_n(n, bw));
  const sf::BiZSeries series(std::move(F));
  for (auto _ : st) benchmark::DoNotOptimize(sf::stieltjes_extract(series, 2));
}
BENCHMARK(BM_StieltjesExtract)->Unit(benchmark::kMillisecond);

void BM_NewtypeFromConjecture(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sf::newtype_from_conjecture(int(st.range(0)), 6));
}
BENCHMARK(BM_NewtypeFromConjecture)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FiniteReflection(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sf::finite_reflection_check(int(st.range(0)), 1));
}
BENCHMARK(BM_FiniteReflection)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_HLadder(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sf::h_ladder(int(st.range(0)), 1));
}
BENCHMARK(BM_HLadder)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_EnumerateQuads(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sf::enumerate_quads_exact(int(st.range(0)), int(st.range(1))));
}
BENCHMARK(BM_EnumerateQuads)->Args({1, 3})->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BijectionSuite(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sf::bijection_suite(2, 2));
}
BENCHMARK(BM_BijectionSuite)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
