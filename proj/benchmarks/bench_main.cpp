// Copyright 2026 The qprotect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numbers>

#include "qprotect/channels.hpp"
#include "qprotect/circuits.hpp"
#include "qprotect/estimation.hpp"
#include "qprotect/harness.hpp"
#include "qprotect/optimizer.hpp"
#include "qprotect/schemes.hpp"

using namespace qprotect;

namespace {

constexpr double kTheta = 2 * std::numbers::pi / 3;

void BM_ProductChannel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DensityMatrix rho = DensityMatrix::from_pure(input_state(n, kTheta));
  const KrausChannel ch = make_channel(ChannelKind::Depolarizing, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(apply_product_channel(rho, ch));
}
BENCHMARK(BM_ProductChannel)->DenseRange(2, 8, 2);

void BM_Compile(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CircuitDef c = b_op(n, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(compile(c));
}
BENCHMARK(BM_Compile)->DenseRange(2, 8, 2);

void BM_PipelinePoint(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const StateVector psi = input_state(n, kTheta);
  const KrausChannel ch = make_channel(ChannelKind::Dephasing, 0.5);
  for (auto _ : state) {
    const auto inst =
        resolve_scheme(Scheme::IndividualCollective, ChannelKind::Dephasing, n, kTheta, 0.3);
    benchmark::DoNotOptimize(pure_fidelity(psi, run_protected(inst, ch, psi)));
  }
}
BENCHMARK(BM_PipelinePoint)->Arg(2)->Arg(4);

void BM_OptimizeXi(benchmark::State& state) {
  const XiProblem prob{Scheme::CollectiveIndividual, ChannelKind::Dephasing, 0.5,
                       static_cast<std::size_t>(state.range(0)), kTheta};
  for (auto _ : state) benchmark::DoNotOptimize(optimize_xi_exact(prob));
}
BENCHMARK(BM_OptimizeXi)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Sampling(benchmark::State& state) {
  const StateVector psi = input_state(2, kTheta);
  const auto inst =
      resolve_scheme(Scheme::Unprotected, ChannelKind::Dephasing, 2, kTheta, 0.0);
  const DensityMatrix rho =
      run_protected(inst, make_channel(ChannelKind::Dephasing, 0.5), psi);
  const CircuitDef prep = u_prep(2, kTheta);
  const auto shots = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fidelity_sampled(prep, rho, shots, 1));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * shots));
}
BENCHMARK(BM_Sampling)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_DefaultSweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg));
}
BENCHMARK(BM_DefaultSweep)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
