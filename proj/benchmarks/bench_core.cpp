#include <benchmark/benchmark.h>

#include "ffdet/field.hpp"
#include "ffdet/linalg.hpp"
#include "ffdet/matrices.hpp"
#include "ffdet/poly.hpp"
#include "ffdet/rng.hpp"

namespace {

using namespace ffdet;

void BM_det_field(benchmark::State& state) {
  const auto q = state.range(0);
  const FieldCtx ctx = FieldCtx::prime_field(q);
  const SquareMatrix m = build_tq(ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(det_field(m));
  }
  state.SetComplexityN(q);
}
BENCHMARK(BM_det_field)->Arg(29)->Arg(101)->Arg(197)->Unit(benchmark::kMillisecond);

void BM_build_tq_extension(benchmark::State& state) {
  const FieldCtx ctx = FieldCtx::extension_field(5, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_tq(ctx));
  }
}
BENCHMARK(BM_build_tq_extension)->Unit(benchmark::kMillisecond);

void BM_det_rational(benchmark::State& state) {
  const RationalMatrix m = build_tp_rational(11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(det_rational(m));
  }
}
BENCHMARK(BM_det_rational)->Unit(benchmark::kMillisecond);

void BM_powmod_congruence(benchmark::State& state) {
  const auto q = state.range(0);
  const FieldCtx ctx = FieldCtx::prime_field(q);
  const DensePoly base = DensePoly::from_ints(ctx, {1, 1, 1});
  const DensePoly vanish = vanishing_poly(ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(powmod(base, q - 2, vanish));
  }
}
BENCHMARK(BM_powmod_congruence)->Arg(101)->Arg(197)->Unit(benchmark::kMillisecond);

void BM_charpoly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SplitMix64 rng(12345);
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = Rational(rng.range(-5, 5));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(charpoly_rational(m));
  }
}
BENCHMARK(BM_charpoly)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
