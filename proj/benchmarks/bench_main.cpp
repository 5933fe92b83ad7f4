#include <benchmark/benchmark.h>

#include "bozd/datasets.hpp"
#include "bozd/exact.hpp"
#include "bozd/matsuno.hpp"
#include "bozd/zd_profile.hpp"

namespace {

const bozd::RationalInitialData& two_pole() {
  static const auto data = bozd::dataset_two_pole();
  return data;
}

void BM_SolveBranches(benchmark::State& state) {
  const bozd::LaxOleinikPoint pt{4.5, 4.5};
  for (auto _ : state)
    benchmark::DoNotOptimize(bozd::solve_branches(two_pole(), pt));
}
BENCHMARK(BM_SolveBranches);

void BM_Discriminant(benchmark::State& state) {
  const bozd::LaxOleinikPoint pt{4.5, 4.5};
  for (auto _ : state)
    benchmark::DoNotOptimize(bozd::discriminant_at(two_pole(), pt));
}
BENCHMARK(BM_Discriminant);

void BM_UZdClosedForm(benchmark::State& state) {
  const bozd::LaxOleinikPoint pt{4.5, 4.5};
  const double eps = std::pow(2.0, -state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(bozd::u_zd(two_pole(), pt, eps));
}
BENCHMARK(BM_UZdClosedForm)->Arg(5)->Arg(7);

void BM_BuildContours(benchmark::State& state) {
  const bozd::LaxOleinikPoint pt{4.5, 4.5};
  const double eps = std::pow(2.0, -state.range(0));
  const auto branches = bozd::solve_branches(two_pole(), pt);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        bozd::build_contours(two_pole(), pt, branches, eps));
}
BENCHMARK(BM_BuildContours)->Arg(5)->Arg(7);

void BM_UExact(benchmark::State& state) {
  const bozd::LaxOleinikPoint pt{4.5, 4.5};
  const double eps = std::pow(2.0, -state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(bozd::u_exact(two_pole(), pt, eps));
}
BENCHMARK(BM_UExact)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Matsuno(benchmark::State& state) {
  const auto spec = bozd::MatsunoSpec::make(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(bozd::u_matsuno(spec, 1.0, 1.3));
}
BENCHMARK(BM_Matsuno)->Arg(32)->Arg(128);

void BM_LaguerreZeros(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        bozd::laguerre_zeros(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LaguerreZeros)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
