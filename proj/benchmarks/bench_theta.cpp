#include <benchmark/benchmark.h>

#include "theta/cells.hpp"
#include "theta/catalog.hpp"
#include "theta/simple_complex.hpp"
#include "theta/wreath.hpp"

namespace {

using namespace theta;

SimpleADC largest() { return SimpleADC(catalog().back().dims); }

void BM_EnumerateHomCatalog(benchmark::State& state) {
  std::vector<SimpleADC> objects;
  for (const auto& e : catalog()) objects.emplace_back(e.dims);
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& k : objects)
      for (const auto& l : objects) total += enumerate_hom(k, l).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateHomCatalog)->Unit(benchmark::kMillisecond);

void BM_EnumerateCells(benchmark::State& state) {
  const auto k = largest().complex();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cells(k, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateCells)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_VObject(benchmark::State& state) {
  std::vector<SimpleADC> parts(static_cast<std::size_t>(state.range(0)), largest());
  const WreathObject w = wreath_of_simple(parts);
  for (auto _ : state) benchmark::DoNotOptimize(v_object(w));
}
BENCHMARK(BM_VObject)->Arg(1)->Arg(4)->Arg(16);

void BM_AllSequences(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(all_dimension_sequences(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_AllSequences)->Arg(13)->Arg(21);

}  // namespace

BENCHMARK_MAIN();
