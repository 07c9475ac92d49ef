#include <benchmark/benchmark.h>

#include "phdim/distance.hpp"
#include "phdim/measure.hpp"
#include "phdim/mst.hpp"
#include "phdim/rips.hpp"

using namespace phdim;

namespace {

PointCloud bench_cloud(const char* name, std::size_t n) {
  return sample_measure(measure_from_name(name), n, 12345);
}

void BM_SampleSierpinski(benchmark::State& state) {
  MeasureSpec spec = measure_from_name("sierpinski-triangle");
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_measure(spec, n, seed++));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleSierpinski)->Arg(1024)->Arg(8192);

void BM_MstPrim(benchmark::State& state) {
  PointCloud cloud =
      bench_cloud("sierpinski-triangle", static_cast<std::size_t>(state.range(0)));
  DistanceMatrix d = pairwise_distances(cloud);
  for (auto _ : state) benchmark::DoNotOptimize(minimum_spanning_tree(d));
}
BENCHMARK(BM_MstPrim)->Arg(512)->Arg(2048)->Arg(8192)
    ->Unit(benchmark::kMillisecond);

void BM_RipsDegree1(benchmark::State& state) {
  PointCloud cloud =
      bench_cloud("sierpinski-triangle", static_cast<std::size_t>(state.range(0)));
  DistanceMatrix d = pairwise_distances(cloud);
  for (auto _ : state) benchmark::DoNotOptimize(rips_persistence(d, 1));
}
BENCHMARK(BM_RipsDegree1)->Arg(128)->Arg(256)->Arg(512)->Arg(1024)
    ->Unit(benchmark::kMillisecond);

void BM_RipsDegree2(benchmark::State& state) {
  PointCloud cloud =
      bench_cloud("menger-sponge", static_cast<std::size_t>(state.range(0)));
  DistanceMatrix d = pairwise_distances(cloud);
  for (auto _ : state) benchmark::DoNotOptimize(rips_persistence(d, 2));
}
BENCHMARK(BM_RipsDegree2)->Arg(64)->Arg(128)->Arg(256)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
