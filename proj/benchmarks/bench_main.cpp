#include <benchmark/benchmark.h>

#include "ncspec/ncspec.hpp"

using namespace ncspec;

static void BM_BuildClifford(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_clifford(n));
}
BENCHMARK(BM_BuildClifford)->DenseRange(2, 10, 2);

static void BM_TorusSpectrum(benchmark::State& state) {
  const CliffordRep cliff = build_clifford(2);
  const TruncatedGNS h(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(assemble_dirac(cliff, h)));
  state.SetComplexityN(h.dim());
}
BENCHMARK(BM_TorusSpectrum)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_GnsOperator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ThetaMatrix theta = ThetaMatrix::uniform(n, 0.37);
  const TruncatedGNS h(n, 6);
  FourierElement a(n);
  for (int j = 0; j < n; ++j) a += FourierElement::generator(n, j);
  for (auto _ : state) benchmark::DoNotOptimize(gns_operator(a, h, theta));
}
BENCHMARK(BM_GnsOperator)->DenseRange(2, 4);

static void BM_SigmaSequence(benchmark::State& state) {
  const SpectralData spec =
      spectrum(assemble_dirac(build_clifford(2), TruncatedGNS(2, static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_sequence(spec, 2.0));
}
BENCHMARK(BM_SigmaSequence)->Arg(10)->Arg(30);

BENCHMARK_MAIN();
