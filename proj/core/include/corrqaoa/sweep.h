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


#ifndef CORRQAOA_SWEEP_H_
#define CORRQAOA_SWEEP_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "corrqaoa/noisy_executor.h"
#include "corrqaoa/optimizer.h"

namespace corrqaoa {

struct SweepOutputs {
  std::string csv;
  std::string json;
  std::string plot;  // SVG; empty to skip
};

/// Grid of experiments. JSON keys match the field names; nested
/// "optimizer" takes OptimizerConfig's field names with a nested "local".
struct SweepConfig {
  std::vector<std::string> instances;
  int n = 6;
  int r = 3;
  std::vector<NoiseMode> models = {NoiseMode::kTemporal, NoiseMode::kSpatial};
  std::vector<double> p_values = {0.001, 0.01};
  std::vector<double> kappa_values = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  /// "X", "Y" or "Z".
  std::string error_op = "Y";
  SlotSchedule schedule = SlotSchedule::kActiveGates;
  bool include_boundary_slot = false;
  OptimizerConfig optimizer;
  SweepOutputs outputs;
  std::uint64_t seed = 0;
  int workers = 1;
  /// When false, wall times are written as 0 so reruns are byte-identical.
  bool record_wall_time = true;

  /// Throws std::invalid_argument on an empty grid, a bad probability or
  /// an instance that does not have n(n-1)/2 weights.
  void validate() const;
};

SweepConfig parse_sweep_config(std::string_view json_text);
std::string to_json(const SweepConfig& config);

/// Matrix2c for an error_op name; throws std::invalid_argument.
Matrix2c error_operator(std::string_view name);

struct ExperimentRecord {
  std::string instance;
  NoiseMode model = NoiseMode::kNone;
  double p = 0.0;
  double kappa = 0.0;
  double ar = 0.0;
  double ar0 = 0.0;
  double dar = 0.0;
  double chi = 0.0;
  double ar_lin = 0.0;
  int c_star = 0;
  double c_tilde = 0.0;
  std::vector<double> best_betas;
  std::vector<double> best_gammas;
  std::uint64_t seed = 0;
  int restarts_converged = 0;
  double wall_time = 0.0;
  /// Non-empty if this point failed; numeric fields are then NaN.
  std::string error;
};

/// One record per (instance, model, p, kappa); a kNone model yields a
/// single record per instance at p = kappa = 0. The noiseless optimum is
/// computed once per instance, chi once per (instance, model, kappa) at that
/// optimum. AR_lin = AR0(p = 0) + p chi / C*. Records come back in grid order
/// whatever the worker count.
using SweepProgress = std::function<void(const ExperimentRecord&, std::size_t done, std::size_t total)>;
std::vector<ExperimentRecord> run_sweep(const SweepConfig& config, const SweepProgress& progress = {});

inline constexpr std::string_view kCsvHeader =
    "instance,model,p,kappa,AR,AR0,dAR,chi,AR_lin,C_star,c_tilde,betas,gammas,seed,converged,wall_time_s";

/// Header plus one line per record; reals with 17 significant digits and
/// angle lists joined by ';'.
std::string to_csv(const std::vector<ExperimentRecord>& records);
std::string to_json(const SweepConfig& config, const std::vector<ExperimentRecord>& records);

/// Config embedded in a results JSON (or a bare config).
SweepConfig config_from_results_json(std::string_view json_text);

std::string format_real(double v);

/// Number of workers from CORRQAOA_WORKERS, or `fallback` when unset.
/// Throws std::invalid_argument on a malformed value.
int default_workers(int fallback = 1);

}  // namespace corrqaoa

#endif  // CORRQAOA_SWEEP_H_
