#include <benchmark/benchmark.h>

#include <random>

#include "slc/arith.hpp"
#include "slc/cusp.hpp"
#include "slc/cyclic_quotient.hpp"
#include "slc/invariants.hpp"

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-50, 50);
  slc::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(slc::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

// Dual of every cycle of length len with entries in {2, 3, 4}.
void BM_DualEnumeration(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  std::vector<slc::CuspCycle> cycles;
  std::vector<int> e(len, 2);
  for (;;) {
    if (std::any_of(e.begin(), e.end(), [](int x) { return x > 2; })) cycles.emplace_back(e);
    std::size_t i = 0;
    while (i < len && e[i] == 4) e[i++] = 2;
    if (i == len) break;
    ++e[i];
  }
  for (auto _ : state)
    for (const auto& c : cycles) benchmark::DoNotOptimize(slc::dual(c));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cycles.size()));
}
BENCHMARK(BM_DualEnumeration)->Arg(6)->Arg(8);

void BM_MonodromyLongCycle(benchmark::State& state) {
  std::vector<int> e(static_cast<std::size_t>(state.range(0)), 3);
  const slc::CuspCycle c(e);
  for (auto _ : state) benchmark::DoNotOptimize(slc::monodromy(c));
}
BENCHMARK(BM_MonodromyLongCycle)->Arg(64)->Arg(1024);

void BM_EnumerateClassT(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(slc::enumerate_class_t(state.range(0)));
}
BENCHMARK(BM_EnumerateClassT)->Arg(200)->Arg(2000);

void BM_InvariantSexticBasis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(slc::invariant_sextic_basis());
}
BENCHMARK(BM_InvariantSexticBasis)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
