#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "fixtures.hpp"
#include "menichetti/census.hpp"
#include "menichetti/determinant.hpp"
#include "menichetti/division.hpp"
#include "menichetti/fast_field.hpp"

using namespace menichetti;

static void BM_FastFieldMul(benchmark::State& state) {
  FastField f(*fixtures::gf81());
  FastField::Code acc = 1;
  FastField::Code step = 7;
  for (auto _ : state) {
    acc = f.mul(f.add(acc, step), step);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FastFieldMul);

static void BM_ExactMul(benchmark::State& state) {
  auto K = fixtures::cubic();
  std::mt19937_64 rng(1);
  auto a = K->random(rng, 4), b = K->random(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ExactMul);

static void BM_DetGeneral(benchmark::State& state) {
  auto K = state.range(0) == 3 ? fixtures::cubic() : fixtures::cyclic_quartic();
  std::mt19937_64 rng(2);
  auto spec = fixtures::random_spec(K, rng);
  auto x = spec.random(rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(det_general(spec, x));
}
BENCHMARK(BM_DetGeneral)->Arg(3)->Arg(4);

static void BM_ExhaustiveGF27(benchmark::State& state) {
  auto K = fixtures::gf27();
  auto fast = std::make_shared<const FastField>(*K);
  auto spec = MenichettiSpec::cyclic(K, {K->one(), K->parse("t"), K->parse("1 + t")});
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_check(spec, fast).status);
}
BENCHMARK(BM_ExhaustiveGF27)->Unit(benchmark::kMillisecond);

static void BM_CensusGF8(benchmark::State& state) {
  auto K = fixtures::gf8();
  CensusOptions opt;
  opt.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census(K, {0, 1, 2}, opt).division_count);
}
BENCHMARK(BM_CensusGF8)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_HeightSieveCubic(benchmark::State& state) {
  auto K = fixtures::cubic();
  auto spec = MenichettiSpec::cyclic(K, {K->one(), K->parse("1 + t"), K->parse("t + t^2")});
  for (auto _ : state) benchmark::DoNotOptimize(height_search(spec, 2, HeightMethod::Sieve).found);
}
BENCHMARK(BM_HeightSieveCubic)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
