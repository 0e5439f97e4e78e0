#include "idpcheck/cycles.hpp"
#include "idpcheck/engine.hpp"
#include "idpcheck/io.hpp"
#include "idpcheck/lattice.hpp"
#include "idpcheck/oracle.hpp"
#include "idpcheck/random_ideals.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace idpcheck;

SquarefreeIdeal k24() { return parse_ideal_text("x1*x2*x3*x4, x5*x6*x7*x8, x1*x5, x2*x6, x3*x7, x4*x8").ideal; }

SquarefreeIdeal ih1() {
  return parse_ideal_text(
             "x1*x2, x1*x3, x2*x3, x3*x6, x6*x7, x7*x13, x12*x13*x14, x11*x12*x14, x10*x11, x9*x10*x14, x8*x9, "
             "x7*x8*x14")
      .ideal;
}

// Odd cycle C_n as an edge ideal; s = n.
SquarefreeIdeal cycle(std::size_t n) {
  std::string text;
  for (std::size_t i = 1; i <= n; ++i)
    text += (i > 1 ? ", " : "") + ("x" + std::to_string(i)) + "*x" + std::to_string(i % n + 1);
  return parse_ideal_text(text).ideal;
}

void BM_OracleK24(benchmark::State& state) {
  auto p = polytope_from_ideal(k24());
  for (auto _ : state) benchmark::DoNotOptimize(decide_normal_bruteforce(p));
}
BENCHMARK(BM_OracleK24)->Unit(benchmark::kMillisecond);

void BM_OracleCycle(benchmark::State& state) {
  auto p = polytope_from_ideal(cycle(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(decide_normal_bruteforce(p));
}
BENCHMARK(BM_OracleCycle)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_TorsionK24(benchmark::State& state) {
  auto p = polytope_from_ideal(k24());
  for (auto _ : state) benchmark::DoNotOptimize(torsion_check(p));
}
BENCHMARK(BM_TorsionK24);

void BM_SpecialOddCycle(benchmark::State& state) {
  auto h = build_from_ideal(ih1());
  for (auto _ : state) benchmark::DoNotOptimize(find_special_odd_cycle(h));
}
BENCHMARK(BM_SpecialOddCycle);

void BM_ExceptionalPair(benchmark::State& state) {
  auto h = build_from_ideal(ih1());
  for (auto _ : state) benchmark::DoNotOptimize(find_exceptional_pair(h));
}
BENCHMARK(BM_ExceptionalPair);

void BM_AnalyzeRandom(benchmark::State& state) {
  auto ideals = random_ideals(1, 64);
  for (auto _ : state)
    for (const auto& i : ideals) benchmark::DoNotOptimize(analyze(i));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ideals.size()));
}
BENCHMARK(BM_AnalyzeRandom)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
