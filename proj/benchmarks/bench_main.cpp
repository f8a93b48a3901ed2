#include <benchmark/benchmark.h>

#include "brauerkit/csa.hpp"
#include "brauerkit/fp_poly.hpp"
#include "brauerkit/honda_tate.hpp"
#include "brauerkit/zfactor.hpp"

using namespace brauerkit;

static void BM_FactorModP(benchmark::State& state) {
  // Phi_35 has degree 24 and splits into factors of degree 12 mod 2.
  ZPoly f{1, -1, 0, 0, 0, 1, -1, 1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1, -1, 1, 0, 0, 0, -1, 1};
  const u64 p = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factor_mod_p(f, p));
}
BENCHMARK(BM_FactorModP)->Arg(2)->Arg(3)->Arg(101)->Arg(65537);

static void BM_FactorOverQ(benchmark::State& state) {
  // (x^4 + 1)(x^4 - x^2 + 1)(x^3 - x - 1)
  ZPoly f = ZPoly{1, 0, 0, 0, 1} * ZPoly{1, 0, -1, 0, 1} * ZPoly{-1, -1, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_q(f));
}
BENCHMARK(BM_FactorOverQ);

static void BM_PlacesAbove(benchmark::State& state) {
  for (auto _ : state) {
    NumberField k = NumberField::from_polynomial({9, 0, 3, 0, 1});
    benchmark::DoNotOptimize(places_above(k, 3));
  }
}
BENCHMARK(BM_PlacesAbove);

static void BM_Compositum(benchmark::State& state) {
  for (auto _ : state) {
    NumberField a = NumberField::from_polynomial({-2, 0, 1});
    NumberField b = NumberField::from_polynomial({-1, -1, 0, 1});
    benchmark::DoNotOptimize(compositum_candidates(a, b));
  }
}
BENCHMARK(BM_Compositum);

static void BM_EmbedDecision(benchmark::State& state) {
  const NumberField q = NumberField::rationals();
  BrauerClass d = make_class(q, {{Place::finite(2, 0), Rational(1, 2)}, {Place::finite(3, 0), Rational(1, 2)}});
  BrauerClass b = make_class(q, {{Place::finite(2, 0), Rational(1, 4)}, {Place::finite(3, 0), Rational(3, 4)}});
  for (auto _ : state) benchmark::DoNotOptimize(embed_decision(d, b));
}
BENCHMARK(BM_EmbedDecision);

static void BM_QmSurface(benchmark::State& state) {
  BrauerClass endo = quaternion_class({2, 3});
  const PrimePower q = prime_power_of(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qm_surface_check(endo, q));
}
BENCHMARK(BM_QmSurface)->Arg(5)->Arg(13)->Arg(49);

BENCHMARK_MAIN();
