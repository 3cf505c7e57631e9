#include <benchmark/benchmark.h>

#include <algorithm>
#include <map>

#include "skewcheck/fixtures.hpp"
#include "skewcheck/setmodels.hpp"

using namespace skewcheck;
namespace fx = skewcheck::fixtures;

namespace {

// Codiscrete category on n objects with X⊗Y = max(X, Y).
const TensorStructure& codiscrete_max(int n) {
  static std::map<int, TensorStructure> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<ObjId> t;
    for (ObjId x = 0; x < n; ++x) {
      for (ObjId y = 0; y < n; ++y) t.push_back(std::max(x, y));
    }
    it = cache.emplace(n, fx::thin_structure(fx::codiscrete(n), std::move(t))).first;
  }
  return it->second;
}

void BM_PentagonSerial(benchmark::State& state) {
  const TensorStructure& s = codiscrete_max(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::check_pentagon(s));
}

void BM_PentagonParallel(benchmark::State& state) {
  const TensorStructure& s = codiscrete_max(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_pentagon(s));
}

void BM_UnitsSerial(benchmark::State& state) {
  const TensorStructure& s = codiscrete_max(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::enumerate_units(s));
}

void BM_UnitsParallel(benchmark::State& state) {
  const TensorStructure& s = codiscrete_max(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_units(s));
}

void BM_CensusSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::census(static_cast<int>(state.range(0))));
}

void BM_CensusParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_PentagonSerial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PentagonParallel)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnitsSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnitsParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
