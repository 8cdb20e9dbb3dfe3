#include "km/fixtures.hpp"
#include "km/mahler.hpp"
#include "km/quadrature.hpp"
#include "km/skein.hpp"

#include <benchmark/benchmark.h>

using namespace km;

namespace {

const BivariateTable& limit_table() {
  static const BivariateTable t = BivariateTable::from(load("limit:k=2").bivariate);
  return t;
}

void torus(benchmark::State& state, Kernel kernel) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(torus_log_mean(limit_table(), n, kernel));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n) * n);
}

void BM_TorusSerial(benchmark::State& s) { torus(s, Kernel::serial); }
void BM_TorusParallel(benchmark::State& s) { torus(s, Kernel::parallel); }
BENCHMARK(BM_TorusSerial)->RangeMultiplier(4)->Range(256, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorusParallel)->RangeMultiplier(4)->Range(256, 4096)->Unit(benchmark::kMillisecond);

void BM_LinearZ(benchmark::State& state) {
  HalfLaurent1 a, b;
  for (const auto& [e, c] : load("limit:k=2").bivariate.terms()) (e[1] == 0 ? a : b).add_term(e[0], c);
  for (auto _ : state) benchmark::DoNotOptimize(mahler_linear_z(a, b).value);
}
BENCHMARK(BM_LinearZ)->Unit(benchmark::kMillisecond);

void BM_RootsLehmer(benchmark::State& state) {
  const HalfLaurent1 l = load("lehmer").poly;
  for (auto _ : state) benchmark::DoNotOptimize(mahler_measure(l).mahler);
}
BENCHMARK(BM_RootsLehmer)->Unit(benchmark::kMicrosecond);

void BM_SkeinIterated(benchmark::State& state) {
  const DiagramCode d = *load("iterated:n=" + std::to_string(state.range(0))).diagram;
  for (auto _ : state) benchmark::DoNotOptimize(homflypt(d));
}
BENCHMARK(BM_SkeinIterated)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
