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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "corrqaoa/ansatz.h"
#include "corrqaoa/gates.h"
#include "corrqaoa/hybrid_state.h"
#include "corrqaoa/noisy_executor.h"
#include "corrqaoa/sk_instance.h"

namespace corrqaoa {
namespace {

OptimizerConfig quick() {
  OptimizerConfig cfg;
  cfg.restarts = 4;
  cfg.seed = 5;
  return cfg;
}

TEST(QaoaRunner, SingleEdgeReachesOptimum) {
  const SkInstance inst = parse_instance("+");
  // <Z1 Z2> after one cycle: sin(2 beta) sin(gamma).
  const NoisyLandscape l(inst, build_swap_network(inst, 1), NoiseModel::none());
  for (double b : {-1.0, 0.4, 2.0}) {
    for (double g : {-2.5, 0.7, 1.3}) EXPECT_NEAR(l.value(Params{{b}, {g}}), std::sin(2 * b) * std::sin(g), 1e-14);
  }
  const QaoaRun run = run_qaoa(inst, 1, NoiseModel::none(), quick());
  EXPECT_EQ(run.c_star, -1);
  EXPECT_NEAR(run.metrics.ar, 1.0, 1e-8);
  EXPECT_EQ(run.metrics.dar, 0.0);
  EXPECT_EQ(run.noisy.best_value, run.noiseless.best_value);
}

TEST(QaoaRunner, ZeroProbabilityLeavesRatioUnchanged) {
  const SkInstance inst = parse_instance("+-++-+");
  for (const NoiseModel& m : {NoiseModel::temporal(0.0, 0.4), NoiseModel::spatial(0.0, 1.0)}) {
    const QaoaRun run = run_qaoa(inst, 1, m, quick());
    EXPECT_NEAR(run.metrics.ar, run.metrics.ar0, 1e-6);
    EXPECT_EQ(run.c_tilde_unaware, run.noiseless.best_value);
  }
}

TEST(QaoaRunner, NoiseAwareNeverWorseThanUnaware) {
  const SkInstance inst = parse_instance("+-++-+");
  for (const NoiseModel& m : {NoiseModel::temporal(0.05, 0.5), NoiseModel::spatial(0.2, 0.0)}) {
    const QaoaRun run = run_qaoa(inst, 2, m, quick());
    EXPECT_GE(run.metrics.dar, -1e-6);
    EXPECT_NEAR(run.metrics.ar, run.noisy.best_value / run.c_star, 1e-15);
    const NoisyLandscape noisy(inst, build_swap_network(inst, 2), m);
    EXPECT_NEAR(noisy.value(run.noiseless_params), run.c_tilde_unaware, 1e-14);
    EXPECT_NEAR(noisy.value(run.noisy_params), run.noisy.best_value, 1e-14);
  }
}

TEST(QaoaRunner, ToyRatioEqualsP) {
  // One qubit in |+>, RY(pi/2) error with probability p, H = Z, C* = -1.
  for (double p : {0.0, 0.25, 1.0}) {
    HybridState s = HybridState::plus_state(1);
    s.attach_fluctuator(0, p);
    s.apply_controlled_error(0, 0, ry_matrix(std::numbers::pi / 2));
    const double c = s.expectation(std::vector<double>{1.0, -1.0});
    EXPECT_NEAR(metrics(c, c, -1.0).ar, p, 1e-15);
  }
}

TEST(QaoaRunner, MetricsRejectZeroOptimum) {
  EXPECT_THROW(metrics(1.0, 1.0, 0.0), std::domain_error);
  const Metrics m = metrics(-3.0, -2.0, -4.0);
  EXPECT_DOUBLE_EQ(m.ar, 0.75);
  EXPECT_DOUBLE_EQ(m.ar0, 0.5);
  EXPECT_DOUBLE_EQ(m.dar, 0.25);
}

}  // namespace
}  // namespace corrqaoa
