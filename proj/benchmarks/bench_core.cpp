#include <benchmark/benchmark.h>

#include <random>

#include "ctw/adjunction.hpp"
#include "ctw/cdg.hpp"
#include "ctw/cotorsion.hpp"
#include "ctw/fixtures.hpp"
#include "ctw/homological.hpp"
#include "ctw/towers.hpp"

using namespace ctw;

namespace {

FpMatrix random_matrix(std::size_t n, std::uint32_t p, unsigned seed) {
  std::mt19937 g(seed);
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  FpMatrix m(n, n, p);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(g);
  return m;
}

}  // namespace

static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  FpMatrix m = random_matrix(n, 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_Kernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  FpMatrix m = random_matrix(n, 2, 11);
  for (std::size_t c = 0; c < n / 2; ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, n - 1 - c) = m(r, c);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(m));
}
BENCHMARK(BM_Kernel)->RangeMultiplier(2)->Range(16, 256);

// Ext^i(k, k) over the dual numbers; every syzygy is k again.
static void BM_ExtDualNumbers(benchmark::State& state) {
  auto d = fixtures::dual_numbers(2);
  Module k = fixtures::dual_trivial(d);
  const auto i = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ext_dim(k, k, i, CoverKind::Greedy));
}
BENCHMARK(BM_ExtDualNumbers)->DenseRange(1, 9, 4);

static void BM_IsProjective(benchmark::State& state) {
  auto a2 = fixtures::a2_path(3);
  auto m = fixtures::a2_modules(a2);
  Module x = power(direct_sum(m.p1, m.s2).module, static_cast<std::size_t>(state.range(0))).module;
  for (auto _ : state) benchmark::DoNotOptimize(is_projective(x));
}
BENCHMARK(BM_IsProjective)->RangeMultiplier(2)->Range(1, 8);

static void BM_SalceRoundTrip(benchmark::State& state) {
  auto a2 = fixtures::a2_path(3);
  auto m = fixtures::a2_modules(a2);
  auto o = all_inj(a2);
  Module x = power(m.s1, static_cast<std::size_t>(state.range(0))).module;
  for (auto _ : state) {
    benchmark::DoNotOptimize(salce_precover_from_preenvelope(o, x));
    benchmark::DoNotOptimize(salce_preenvelope_from_precover(o, x));
  }
}
BENCHMARK(BM_SalceRoundTrip)->RangeMultiplier(2)->Range(1, 8);

static void BM_QStep(benchmark::State& state) {
  auto r = fixtures::a2_path(3);
  auto d = fixtures::dual_numbers(3);
  auto a = tensor_product(r, d);
  RingMap rm = RingMap::make(fixtures::tensor_inclusion(r, d, a));
  auto cfg = LiftedPairConfig::make(rm, proj_all(r), 1, LiftSide::Coinduced);
  Module x = power(fixtures::projective_at(a, 2), static_cast<std::size_t>(state.range(0))).module;
  x = fixtures::quotient_module(x, x.action(3));
  for (auto _ : state) benchmark::DoNotOptimize(q_step(cfg, x));
}
BENCHMARK(BM_QStep)->DenseRange(1, 3);

static void BM_BongartzPreenvelope(benchmark::State& state) {
  auto a2 = fixtures::a2_path(3);
  auto m = fixtures::a2_modules(a2);
  std::vector<Module> s = {Module::regular(a2), direct_sum(m.p1, m.s1).module};
  Module x = power(m.s2, static_cast<std::size_t>(state.range(0))).module;
  for (auto _ : state) benchmark::DoNotOptimize(bongartz_preenvelope(s, x));
}
BENCHMARK(BM_BongartzPreenvelope)->RangeMultiplier(2)->Range(1, 8);

static void BM_HomComplex(benchmark::State& state) {
  auto ext = delta_extension(fixtures::graded_dual_numbers_cdg(3));
  Module k = Module::create(ext->a, {FpMatrix::identity(1, 3), FpMatrix(1, 1, 3)}, {0});
  Module sum = power(k, static_cast<std::size_t>(state.range(0))).module;
  CDGModule l = as_cdg(ext, sum);
  for (auto _ : state) benchmark::DoNotOptimize(homotopy_classes(l, l));
}
BENCHMARK(BM_HomComplex)->RangeMultiplier(2)->Range(1, 16);

BENCHMARK_MAIN();
