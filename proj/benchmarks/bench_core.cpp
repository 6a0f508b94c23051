#include <benchmark/benchmark.h>

#include <random>

#include "rcb/catalog.hpp"
#include "rcb/invariant_rings.hpp"
#include "rcb/smith.hpp"
#include "rcb/surgery.hpp"

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-9, 9);
  rcb::IntMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rcb::smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_DecomposeSeifert(benchmark::State& state) {
  const auto base = rcb::BaseSurface::make(true, 0, 3);
  const auto problem = rcb::SurgeryProblem::make(base, {{1, 2}, {1, 3}, {-5, 7}}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rcb::decompose(problem));
}
BENCHMARK(BM_DecomposeSeifert);

void BM_DecomposeConnectedSum(benchmark::State& state) {
  const auto base = rcb::BaseSurface::make(false, 2, 4);
  const auto problem = rcb::SurgeryProblem::make(base, {{1, 0}, {3, 5}}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rcb::decompose(problem));
}
BENCHMARK(BM_DecomposeConnectedSum);

void BM_VerifyRelation(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rcb::verify_relation(n));
}
BENCHMARK(BM_VerifyRelation)->Arg(6)->Arg(12)->Arg(24);

void BM_TorusQuotient(benchmark::State& state) {
  const rcb::Mat2 a{0, -1, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(rcb::torus_quotient(a));
}
BENCHMARK(BM_TorusQuotient);

}  // namespace

BENCHMARK_MAIN();
