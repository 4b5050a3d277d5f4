// Serial reference scan against the OpenMP kernel on the union grid.
#include <benchmark/benchmark.h>

#include "rattet/search.hpp"

namespace {

const std::vector<rattet::RawQuadruple>& candidates() {
  static const auto c = rattet::enumerate_candidates(rattet::DenominatorProfile::union_grid());
  return c;
}

void BM_ScanSerial(benchmark::State& state) {
  for (auto _ : state) {
    auto r = rattet::scan_candidates(candidates(), 1e-8, rattet::Kernel::kSerial, 1);
    benchmark::DoNotOptimize(r.exact_zero.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(candidates().size()));
}

void BM_ScanParallel(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = rattet::scan_candidates(candidates(), 1e-8, rattet::Kernel::kParallel, workers);
    benchmark::DoNotOptimize(r.exact_zero.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(candidates().size()));
}

void BM_FullSearch(benchmark::State& state) {
  rattet::SearchConfig cfg;
  cfg.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = rattet::run_sporadic_search(cfg);
    benchmark::DoNotOptimize(rep.sporadic.size());
  }
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullSearch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
