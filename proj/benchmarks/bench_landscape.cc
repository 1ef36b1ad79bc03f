// Copyright 2026 The corrqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "corrqaoa/ansatz.h"
#include "corrqaoa/fluctuator.h"
#include "corrqaoa/noisy_executor.h"
#include "corrqaoa/sk_instance.h"
#include "corrqaoa/susceptibility.h"

namespace {

using namespace corrqaoa;

const SkInstance& typical() {
  static const SkInstance inst = parse_instance("+-++-+-++-----+");
  return inst;
}

Params some_params(int r) {
  Params x = Params::zeros(r);
  for (int k = 0; k < r; ++k) {
    x.betas[k] = 0.3 + 0.1 * k;
    x.gammas[k] = 0.2 - 0.05 * k;
  }
  return x;
}

NoiseModel model_of(int mode) {
  switch (mode) {
    case 1:
      return NoiseModel::temporal(0.01, 0.5);
    case 2:
      return NoiseModel::spatial(0.01, 0.5);
    default:
      return NoiseModel::none();
  }
}

// args: mode (0 none, 1 temporal, 2 spatial), backend (0 Pauli, 1 density)
void BM_Landscape(benchmark::State& state) {
  const AnsatzCircuit circuit = build_swap_network(typical(), 3);
  ExecutionOptions opt;
  opt.backend = state.range(1) == 0 ? Backend::kPauliTransfer : Backend::kDensityMatrix;
  const NoisyLandscape landscape(typical(), circuit, model_of(static_cast<int>(state.range(0))), opt);
  const Params x = some_params(3);
  for (auto _ : state) benchmark::DoNotOptimize(landscape.value(x));
}
BENCHMARK(BM_Landscape)
    ->ArgsProduct({{0, 1, 2}, {0, 1}})
    ->ArgNames({"mode", "density"})
    ->Unit(benchmark::kMillisecond);

void BM_PhysicalFrame(benchmark::State& state) {
  const AnsatzCircuit circuit = build_swap_network(typical(), 3);
  const NoisyLandscape landscape(typical(), circuit, model_of(static_cast<int>(state.range(0))),
                                 {Frame::kPhysical, Backend::kDensityMatrix});
  const Params x = some_params(3);
  for (auto _ : state) benchmark::DoNotOptimize(landscape.value(x));
}
BENCHMARK(BM_PhysicalFrame)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Gradient(benchmark::State& state) {
  const AnsatzCircuit circuit = build_swap_network(typical(), 3);
  const NoisyLandscape landscape(typical(), circuit, model_of(static_cast<int>(state.range(0))));
  const Params x = some_params(3);
  for (auto _ : state) benchmark::DoNotOptimize(landscape.central_gradient(x, 1e-6));
}
BENCHMARK(BM_Gradient)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ChiExact(benchmark::State& state) {
  const AnsatzCircuit circuit = build_swap_network(typical(), 3);
  const NoisyLandscape landscape(typical(), circuit, model_of(static_cast<int>(state.range(0))));
  const Params x = some_params(3);
  for (auto _ : state) benchmark::DoNotOptimize(chi_exact(landscape, x).chi);
}
BENCHMARK(BM_ChiExact)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_TransitionPower(benchmark::State& state) {
  std::uint64_t t = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(transition_power(0.01, 0.7, t));
    t = t % 1000 + 1;
  }
}
BENCHMARK(BM_TransitionPower);

void BM_BruteForce(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const SkInstance inst = random_instance(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_optimum(inst).c_star);
}
BENCHMARK(BM_BruteForce)->Arg(6)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
