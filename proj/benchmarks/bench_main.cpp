#include <benchmark/benchmark.h>

#include <random>

#include "ellsl2/deform.hpp"
#include "ellsl2/elliptic.hpp"
#include "ellsl2/hopf.hpp"
#include "ellsl2/rewrite.hpp"

using namespace ellsl2;

static void BM_SnSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sn_cn_dn_series(0.6, order));
}
BENCHMARK(BM_SnSeries)->Arg(7)->Arg(15)->Arg(25)->Arg(50);

static void BM_JacobiNumeric(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_numeric({0.7, 0.3}, 0.8));
}
BENCHMARK(BM_JacobiNumeric);

static void BM_EllipticTriplet(benchmark::State& state) {
  const SpinRep rep = build_spin(HalfInteger::from_twice(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_elliptic_triplet(rep, {0.9, 0.5}));
}
BENCHMARK(BM_EllipticTriplet)->DenseRange(1, 9, 2);

static void BM_RelationResiduals(benchmark::State& state) {
  const auto t = build_elliptic_triplet(build_spin(HalfInteger::from_twice(6)), {0.9, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(relation_residuals(t));
}
BENCHMARK(BM_RelationResiduals);

static void BM_Delta2(benchmark::State& state) {
  const SpinRep a = build_spin(HalfInteger::from_twice(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(delta2({0.8, 0.5}, a, a));
}
BENCHMARK(BM_Delta2)->Arg(1)->Arg(2)->Arg(3);

static void BM_NormalForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> pick(0, 3);
  Word w(static_cast<std::size_t>(state.range(0)));
  for (auto& l : w) l = static_cast<Letter>(pick(rng));
  for (auto _ : state) benchmark::DoNotOptimize(nf(w));
}
BENCHMARK(BM_NormalForm)->Arg(4)->Arg(8)->Arg(12);

static void BM_InversionAutomorphism(benchmark::State& state) {
  const GeneratorMap m = inversion_map(Rational(2, 5), Rational(1, 3), -1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_automorphism(m));
}
BENCHMARK(BM_InversionAutomorphism);

BENCHMARK_MAIN();
