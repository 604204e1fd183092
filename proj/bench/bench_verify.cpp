// Serial reference vs OpenMP batch verification.
#include <benchmark/benchmark.h>

#include "lenard/equivariant.hpp"
#include "lenard/gelfand_dikii.hpp"
#include "lenard/wdvv.hpp"

using namespace lenard;

namespace {

const equivariant::LenardComplex& example3() {
  static const auto c = equivariant::assemble_complex(equivariant::example3_fixture().params);
  return c;
}

void BM_VerifyComplex(benchmark::State& state, Execution exec) {
  const auto& c = example3();
  const auto pts = equivariant::sample_points(c, static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(equivariant::verify_complex(c, pts, {}, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VerifyGd(benchmark::State& state, Execution exec) {
  const auto pts = gd::sample_points(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(gd::verify_gd_complex(pts, 1e-8, 1e-6, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VerifyWdvv(benchmark::State& state, Execution exec) {
  const auto f = wdvv::VeselovPotential(3, 2).prepotential();
  const auto pts = wdvv::sample_points(f, static_cast<std::size_t>(state.range(0)), 42);
  wdvv::WdvvSuiteOptions opts;
  opts.generalized = true;
  opts.exec = exec;
  for (auto _ : state) benchmark::DoNotOptimize(wdvv::verify_prepotential(f, pts, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_VerifyComplex, serial, Execution::serial)->Arg(50)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyComplex, parallel, Execution::parallel)->Arg(50)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_VerifyGd, serial, Execution::serial)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyGd, parallel, Execution::parallel)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_VerifyWdvv, serial, Execution::serial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyWdvv, parallel, Execution::parallel)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
