#include <benchmark/benchmark.h>

#include "unicas/pp/duality.hpp"
#include "unicas/pp/spectrum.hpp"
#include "unicas/rootdata/root_datum.hpp"
#include "unicas/vogel/deligne.hpp"

using namespace unicas;

static void BM_BuildRootDatumE8(benchmark::State& state) {
  const rootdata::AlgebraId e8(rootdata::Family::E, 8);
  for (auto _ : state) benchmark::DoNotOptimize(rootdata::build_root_datum(e8));
}
BENCHMARK(BM_BuildRootDatumE8)->Unit(benchmark::kMillisecond);

static void BM_CasimirPolyKn(benchmark::State& state) {
  const rootdata::AlgebraId a(rootdata::Family::D, static_cast<int>(state.range(0)));
  const auto d = rootdata::root_datum(a);
  const auto x2 = rootdata::x2_weight(a).front();
  const auto g = rootdata::adjoint_weight(a);
  for (auto _ : state) benchmark::DoNotOptimize(rootdata::casimir_poly_kn(*d, x2, g));
}
BENCHMARK(BM_CasimirPolyKn)->Arg(5)->Arg(9)->Arg(16);

static void BM_WeylDimE8(benchmark::State& state) {
  const rootdata::AlgebraId e8(rootdata::Family::E, 8);
  const auto d = rootdata::root_datum(e8);
  const auto w = rootdata::Weight::parse(e8, "[1,1,1,1,1,1,1,1]");
  for (auto _ : state) benchmark::DoNotOptimize(rootdata::weyl_dim(*d, w));
}
BENCHMARK(BM_WeylDimE8);

static void BM_PPSeries(benchmark::State& state) {
  const auto p = pp::ab_from_diagram(pp::YoungDiagram({4, 4, 2, 1}));
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pp::pp_series(pp::PPFamily::so, p, order));
}
BENCHMARK(BM_PPSeries)->Arg(3)->Arg(6)->Unit(benchmark::kMicrosecond);

static void BM_DualityC2(benchmark::State& state) {
  const pp::ABProfile p({1, 4, 7, 9}, {2, 3, 8, 10});
  for (auto _ : state) benchmark::DoNotOptimize(pp::duality_check_c2(p));
}
BENCHMARK(BM_DualityC2);

static void BM_DualitySeriesRectangle(benchmark::State& state) {
  const auto d = pp::YoungDiagram::rectangle(4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(pp::duality_check_series(d, pp::kMaxSeriesDualityOrder));
}
BENCHMARK(BM_DualitySeriesRectangle)->Unit(benchmark::kMillisecond);

static void BM_DeligneCleared(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vogel::deligne_s2_cleared());
}
BENCHMARK(BM_DeligneCleared)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
