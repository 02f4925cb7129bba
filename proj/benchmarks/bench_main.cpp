#include "homgeo/diophantine.hpp"
#include "homgeo/geometry.hpp"
#include "homgeo/integer.hpp"
#include "homgeo/pipeline.hpp"

#include <benchmark/benchmark.h>

using namespace homgeo;

static void BM_IsqrtFloor(benchmark::State& state) {
  const Integer n = ipow(Integer(10), static_cast<unsigned>(state.range(0))) + 12345;
  for (auto _ : state) benchmark::DoNotOptimize(isqrt_floor(n));
}
BENCHMARK(BM_IsqrtFloor)->Arg(12)->Arg(40)->Arg(200);

static void BM_IsPerfectSquare(benchmark::State& state) {
  long long n = 1'000'000'007;
  for (auto _ : state) benchmark::DoNotOptimize(is_perfect_square(n++));
}
BENCHMARK(BM_IsPerfectSquare);

static void BM_SieveChunk(benchmark::State& state) {
  const SquareObstruction& obs = obstruction_for(CaseLabel::BPlus);
  for (auto _ : state) benchmark::DoNotOptimize(sieve_range(obs, 500'000, 500'000 + state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SieveChunk)->Arg(10'000);

static void BM_EliminateCond2(benchmark::State& state) {
  const ParamSystem ps{3, 6, 0, 23};
  for (auto _ : state) benchmark::DoNotOptimize(eliminate(ps));
}
BENCHMARK(BM_EliminateCond2);

static void BM_Search(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_search(30, state.range(0)));
}
BENCHMARK(BM_Search)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_ClosurePG33(benchmark::State& state) {
  const Geometry g = build_projective(3, 3);
  const PointId subset[] = {0, 7, 19};
  for (auto _ : state) benchmark::DoNotOptimize(g.closure(subset));
}
BENCHMARK(BM_ClosurePG33);

static void BM_FlatProfileAG33(benchmark::State& state) {
  const Geometry g = build_affine(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(flat_profile(g));
}
BENCHMARK(BM_FlatProfileAG33)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
