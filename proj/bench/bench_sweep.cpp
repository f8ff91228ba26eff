#include <benchmark/benchmark.h>

#include "heiscusp/sweep.hpp"

namespace {

using namespace heiscusp;

// Families 1-4 over every squarefree d <= dmax and five k each: the same
// shape of work the verification sweep runs, sized by dmax.
std::vector<SweepPoint> holonomy_grid(long dmax) {
  std::vector<long> ds;
  for (long d = 1; d <= dmax; ++d) {
    if (is_squarefree(d)) ds.push_back(d);
  }
  const std::vector<long> ks = {2, 4, 6, 8, 10};
  std::vector<SweepPoint> points;
  for (int f = 1; f <= 4; ++f) {
    const std::vector<SweepPoint> g = make_grid(family_from_int(f), ks, ds);
    points.insert(points.end(), g.begin(), g.end());
  }
  return points;
}

void BM_SweepSerial(benchmark::State& state) {
  const std::vector<SweepPoint> points = holonomy_grid(state.range(0));
  for (auto _ : state) {
    auto out = run_sweep(points, SweepMode::Serial);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * points.size());
}

void BM_SweepParallel(benchmark::State& state) {
  const std::vector<SweepPoint> points = holonomy_grid(state.range(0));
  for (auto _ : state) {
    auto out = run_sweep(points, SweepMode::Parallel);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * points.size());
}

BENCHMARK(BM_SweepSerial)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
