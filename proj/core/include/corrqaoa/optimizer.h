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


#ifndef CORRQAOA_OPTIMIZER_H_
#define CORRQAOA_OPTIMIZER_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace corrqaoa {

/// Function to minimize. Implementations must be safe to call concurrently
/// from several threads.
class Objective {
 public:
  virtual ~Objective() = default;
  virtual std::size_t dimension() const = 0;
  virtual double value(std::span<const double> x) const = 0;
  /// Central differences of value() with the given step.
  virtual std::vector<double> gradient(std::span<const double> x, double step) const;
};

class FunctionObjective final : public Objective {
 public:
  FunctionObjective(std::size_t dimension, std::function<double(std::span<const double>)> fn)
      : dimension_(dimension), fn_(std::move(fn)) {}
  std::size_t dimension() const override { return dimension_; }
  double value(std::span<const double> x) const override { return fn_(x); }

 private:
  std::size_t dimension_;
  std::function<double(std::span<const double>)> fn_;
};

enum class LocalMethod { kBfgs, kNelderMead };

std::string_view to_string(LocalMethod method);
LocalMethod parse_local_method(std::string_view text);

/// kBfgs: quasi-Newton on central-difference gradients, falling back to
/// Nelder-Mead from its end point when it stalls. Converged means the
/// gradient max-norm or the relative decrease of one step dropped below tol.
/// kNelderMead: converged when the simplex values spread less than
/// tol * (1 + |f|).
struct LocalConfig {
  LocalMethod method = LocalMethod::kBfgs;
  double tol = 1e-8;
  int max_iter = 500;
  double gradient_step = 1e-6;
};

struct LocalResult {
  std::vector<double> x;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
  bool used_fallback = false;
};

LocalResult local_minimize(const Objective& objective, std::vector<double> x0, const LocalConfig& config);

struct OptimizerConfig {
  int restarts = 32;
  int hops = 4;
  double hop_step = 0.5;
  double hop_temperature = 1.0;
  double init_halfwidth = 0.5e-3;
  LocalConfig local;
  std::uint64_t seed = 0;
  /// Threads running restarts; results do not depend on it.
  int workers = 1;

  /// Throws std::invalid_argument on a non-positive count or width.
  void validate() const;
};

struct RestartRecord {
  std::uint64_t seed = 0;  // seed of the initial draw
  double final_value = 0.0;
  std::vector<double> final_x;
  /// Every local minimization of this restart converged.
  bool converged = false;
  /// Value after each local minimization (initial, then one per hop).
  std::vector<double> minima;
  /// Metropolis decision per hop.
  std::vector<bool> accepted;
};

struct OptimizationResult {
  std::vector<double> best_x;
  double best_value = 0.0;
  std::vector<RestartRecord> per_restart;

  int converged_count() const;
};

/// Seed for (restart, hop); hop 0 is the initial draw.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t restart, std::uint64_t hop);

/// Independent basin-hopping runs. Each restart draws x0 uniformly from
/// [-init_halfwidth, init_halfwidth)^d, minimizes, then `hops` times perturbs
/// the current point uniformly in [-hop_step, hop_step]^d, minimizes and
/// applies the Metropolis rule. The best point seen is returned; ties go to
/// the lowest restart index.
OptimizationResult basin_hop(const Objective& objective, const OptimizerConfig& config);

}  // namespace corrqaoa

#endif  // CORRQAOA_OPTIMIZER_H_
