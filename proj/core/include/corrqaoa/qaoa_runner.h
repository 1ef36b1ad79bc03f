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


#ifndef CORRQAOA_QAOA_RUNNER_H_
#define CORRQAOA_QAOA_RUNNER_H_

#include "corrqaoa/ansatz.h"
#include "corrqaoa/noisy_executor.h"
#include "corrqaoa/optimizer.h"
#include "corrqaoa/sk_instance.h"

namespace corrqaoa {

/// Landscape over flat parameters (betas, then gammas); gradients reuse the
/// landscape's cached prefixes.
class LandscapeObjective final : public Objective {
 public:
  explicit LandscapeObjective(const NoisyLandscape& landscape) : landscape_(landscape) {}
  std::size_t dimension() const override { return 2 * static_cast<std::size_t>(landscape_.circuit().cycles()); }
  double value(std::span<const double> x) const override;
  std::vector<double> gradient(std::span<const double> x, double step) const override;

 private:
  const NoisyLandscape& landscape_;
};

struct Metrics {
  double ar = 0.0;
  double ar0 = 0.0;
  double dar = 0.0;
};

/// AR = c_opt / C*, AR0 = c_unaware / C*, dAR = AR - AR0. Throws
/// std::domain_error if c_star is zero.
Metrics metrics(double c_tilde_opt, double c_tilde_unaware, double c_star);

struct QaoaRun {
  int c_star = 0;
  /// Optimization of the noiseless landscape.
  OptimizationResult noiseless;
  Params noiseless_params;
  /// Optimization of the noisy landscape (same as `noiseless` for kNone).
  OptimizationResult noisy;
  Params noisy_params;
  /// Noisy landscape at noiseless_params.
  double c_tilde_unaware = 0.0;
  Metrics metrics;
};

OptimizationResult optimize(const NoisyLandscape& landscape, const OptimizerConfig& config);

/// Optimizes the noiseless and the noisy landscape independently and
/// evaluates the noiseless optimum under noise.
QaoaRun run_qaoa(const SkInstance& instance, int r, const NoiseModel& model,
                 const OptimizerConfig& config, ExecutionOptions options = {});

/// Same, reusing a finished noiseless optimization of the same circuit.
QaoaRun run_qaoa(const SkInstance& instance, const AnsatzCircuit& circuit, const NoiseModel& model,
                 const OptimizerConfig& config, const OptimizationResult& noiseless,
                 ExecutionOptions options = {});

}  // namespace corrqaoa

#endif  // CORRQAOA_QAOA_RUNNER_H_
