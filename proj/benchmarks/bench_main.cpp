#include <benchmark/benchmark.h>

#include "vancalc/doublebox.hpp"
#include "vancalc/fixtures.hpp"
#include "vancalc/local_models.hpp"
#include "vancalc/scenario.hpp"
#include "vancalc/sss.hpp"

using namespace vancalc;

static void BM_ConvolveBrieskornPham(benchmark::State& state) {
  const int e = int(state.range(0));
  WeightedSpectrum a = brieskorn_pham({2, 3, e}), b = brieskorn_pham({3, e});
  for (auto _ : state) benchmark::DoNotOptimize(convolve(a, b));
  state.SetComplexityN(e);
}
BENCHMARK(BM_ConvolveBrieskornPham)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_SssLimitTermExample(benchmark::State& state) {
  const auto& reg = FixtureRegistry::global();
  std::vector<BranchData> branches{BranchData{1, reg.eigen_entries("example/limit_eigen")}};
  for (auto _ : state) benchmark::DoNotOptimize(sss_limit_term(branches, int(state.range(0))));
}
BENCHMARK(BM_SssLimitTermExample)->Arg(7)->Arg(70)->Arg(700);

static void BM_SssSlcJk(benchmark::State& state) {
  const int k = int(state.range(0));
  WeightedSpectrum yomdin = brieskorn_pham({2, 3, 3 * k});
  const Rational beta = k % 2 ? rat(1, 2) : rat(0);
  for (auto _ : state) benchmark::DoNotOptimize(sss_slc({}, yomdin, 3 * k, {beta}));
}
BENCHMARK(BM_SssSlcJk)->DenseRange(1, 8)->Arg(32);

static void BM_SolveScenario(benchmark::State& state) {
  const auto& reg = FixtureRegistry::global();
  json sc = load_json_file(data_dir() / "scenarios" / "k3_nodal_i.json");
  DegenerationScenario d = scenario_from_json(sc, reg);
  for (auto _ : state) benchmark::DoNotOptimize(solve_scenario(d));
}
BENCHMARK(BM_SolveScenario);

static void BM_KulikovE2(benchmark::State& state) {
  const long F = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(kulikov_e2(F, 3 * F - 6, 2 * F - 4));
}
BENCHMARK(BM_KulikovE2)->Arg(4)->Arg(20);

static void BM_DoubleboxReport(benchmark::State& state) {
  const DbCase c = state.range(0) ? DbCase::deq4 : DbCase::dgt4;
  for (auto _ : state) benchmark::DoNotOptimize(doublebox_report(c, 1));
}
BENCHMARK(BM_DoubleboxReport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
