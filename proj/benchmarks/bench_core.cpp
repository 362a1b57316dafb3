#include <benchmark/benchmark.h>

#include <vector>

#include "tangle/canonical.hpp"
#include "tangle/enumerate.hpp"
#include "tangle/flype.hpp"

using namespace tangle;

namespace {

const std::vector<CascadeCode>& level(int n) {
  static std::vector<std::vector<CascadeCode>> levels = [] {
    std::vector<std::vector<CascadeCode>> out(9);
    enumerate_all({8, 1, false}, [&](int k, const std::vector<CascadeCode>& codes) { out[k] = codes; });
    return out;
  }();
  return levels.at(n);
}

void BM_Expand(benchmark::State& state) {
  const auto& codes = level(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(expand(codes[i++ % codes.size()]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Expand)->Arg(6)->Arg(8);

void BM_InvariantRootCode(benchmark::State& state) {
  std::vector<PlanarMap> maps;
  for (const auto& c : level(static_cast<int>(state.range(0)))) maps.push_back(expand(c));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(invariant_root_code(maps[i++ % maps.size()]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_InvariantRootCode)->Arg(6)->Arg(8);

void BM_CanonicalCode(benchmark::State& state) {
  std::vector<PlanarMap> maps;
  for (const auto& c : level(static_cast<int>(state.range(0)))) maps.push_back(expand(c));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(maps[i++ % maps.size()]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CanonicalCode)->Arg(6)->Arg(8);

void BM_Children(benchmark::State& state) {
  const auto& codes = level(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(children(codes[i++ % codes.size()]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Children)->Arg(6)->Arg(8);

void BM_FlypeSites(benchmark::State& state) {
  std::vector<PlanarMap> maps;
  for (const auto& c : level(static_cast<int>(state.range(0)))) maps.push_back(expand(c));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(flype_sites(maps[i++ % maps.size()]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FlypeSites)->Arg(6)->Arg(8);

void BM_EnumerateAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all({n, 1, false}));
}
BENCHMARK(BM_EnumerateAll)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_FlypeOrbits(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& codes = level(n);
  for (auto _ : state) benchmark::DoNotOptimize(flype_orbits(n, codes));
}
BENCHMARK(BM_FlypeOrbits)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
