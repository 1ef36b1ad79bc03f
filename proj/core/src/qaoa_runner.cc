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


#include "corrqaoa/qaoa_runner.h"

#include <stdexcept>

namespace corrqaoa {

double LandscapeObjective::value(std::span<const double> x) const {
  return landscape_.value(Params::from_flat(x));
}

std::vector<double> LandscapeObjective::gradient(std::span<const double> x, double step) const {
  return landscape_.central_gradient(Params::from_flat(x), step);
}

Metrics metrics(double c_tilde_opt, double c_tilde_unaware, double c_star) {
  if (c_star == 0.0) throw std::domain_error("C* is zero");
  Metrics m;
  m.ar = c_tilde_opt / c_star;
  m.ar0 = c_tilde_unaware / c_star;
  m.dar = m.ar - m.ar0;
  return m;
}

OptimizationResult optimize(const NoisyLandscape& landscape, const OptimizerConfig& config) {
  const LandscapeObjective objective(landscape);
  return basin_hop(objective, config);
}

QaoaRun run_qaoa(const SkInstance& instance, int r, const NoiseModel& model,
                 const OptimizerConfig& config, ExecutionOptions options) {
  const AnsatzCircuit circuit = build_swap_network(instance, r);
  const NoisyLandscape clean(instance, circuit, NoiseModel::none(), options);
  return run_qaoa(instance, circuit, model, config, optimize(clean, config), options);
}

QaoaRun run_qaoa(const SkInstance& instance, const AnsatzCircuit& circuit, const NoiseModel& model,
                 const OptimizerConfig& config, const OptimizationResult& noiseless,
                 ExecutionOptions options) {
  if (noiseless.best_x.size() != 2 * static_cast<std::size_t>(circuit.cycles())) {
    throw std::invalid_argument("noiseless optimum does not match the circuit");
  }
  QaoaRun run;
  run.c_star = brute_force_optimum(instance).c_star;
  run.noiseless = noiseless;
  run.noiseless_params = Params::from_flat(noiseless.best_x);
  const NoisyLandscape noisy(instance, circuit, model, options);
  run.c_tilde_unaware = noisy.value(run.noiseless_params);
  run.noisy = model.mode == NoiseMode::kNone ? noiseless : optimize(noisy, config);
  run.noisy_params = Params::from_flat(run.noisy.best_x);
  run.metrics = metrics(run.noisy.best_value, run.c_tilde_unaware, run.c_star);
  return run;
}

}  // namespace corrqaoa
