// Serial reference vs OpenMP kernels on the same inputs.
#include <benchmark/benchmark.h>

#include "vee/catalog.hpp"
#include "vee/cms.hpp"
#include "vee/numwdvv.hpp"
#include "vee/polycon.hpp"

using namespace vee;

namespace {

struct Fixture {
  VConfiguration cfg;
  Complex lambda;
};

Fixture fixture(const char* name) {
  CatalogEntry e = catalog_get(name);
  return {e.cfg, principal_lambda(e.expected->lambda_squared)};
}

void BM_WdvvSerial(benchmark::State& st) {
  static const Fixture f = fixture("B4");
  WdvvOptions opts{static_cast<std::size_t>(st.range(0)), 1, 0.1};
  for (auto _ : st) benchmark::DoNotOptimize(wdvv_residual_serial(f.cfg, f.lambda, opts));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_WdvvParallel(benchmark::State& st) {
  static const Fixture f = fixture("B4");
  WdvvOptions opts{static_cast<std::size_t>(st.range(0)), 1, 0.1};
  for (auto _ : st) benchmark::DoNotOptimize(wdvv_residual(f.cfg, f.lambda, opts));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_CmsSerial(benchmark::State& st) {
  static const Fixture f = fixture("B4");
  static const Metric m = Metric::vee(f.cfg);
  CmsOptions opts{static_cast<std::size_t>(st.range(0)), 1, 0.1, 1e-9};
  for (auto _ : st) benchmark::DoNotOptimize(cms_identity_residual_serial(f.cfg, m, opts));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_CmsParallel(benchmark::State& st) {
  static const Fixture f = fixture("B4");
  static const Metric m = Metric::vee(f.cfg);
  CmsOptions opts{static_cast<std::size_t>(st.range(0)), 1, 0.1, 1e-9};
  for (auto _ : st) benchmark::DoNotOptimize(cms_identity_residual(f.cfg, m, opts));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

std::vector<RatVector> ten_vectors() {
  const CatalogEntry entry = catalog_get("TenVector");
  std::vector<RatVector> v;
  for (const auto& e : entry.cfg.entries()) v.push_back(e.covector.coords);
  return v;
}

void BM_SearchSerial(benchmark::State& st) {
  static const auto v = ten_vectors();
  SearchOptions opts;
  opts.starts = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(find_multiplicities_serial(v, 0, opts));
}

void BM_SearchParallel(benchmark::State& st) {
  static const auto v = ten_vectors();
  SearchOptions opts;
  opts.starts = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(find_multiplicities(v, 0, opts));
}

}  // namespace

BENCHMARK(BM_WdvvSerial)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WdvvParallel)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CmsSerial)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CmsParallel)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchSerial)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Arg(48)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
