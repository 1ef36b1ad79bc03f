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


#include "corrqaoa/symmetry.h"

#include <gtest/gtest.h>

#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "corrqaoa/ansatz.h"
#include "corrqaoa/gates.h"
#include "corrqaoa/noisy_executor.h"
#include "corrqaoa/sk_instance.h"

namespace corrqaoa {
namespace {

constexpr double kPi = std::numbers::pi;

Params random_params(int r, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  Params x = Params::zeros(r);
  for (int k = 0; k < r; ++k) x.betas[k] = u(rng), x.gammas[k] = u(rng);
  return x;
}

TEST(Symmetry, GeneratorActions) {
  const Params x{{0.1, 0.2, 0.3}, {1.0, 2.0, 3.0}};
  Params y = apply_generator(x, {GeneratorKind::kGammaShift, 2, false});
  EXPECT_EQ(y.gammas, (std::vector<double>{1.0, 2.0 + 2 * kPi, 3.0}));
  EXPECT_EQ(y.betas, x.betas);
  y = apply_generator(x, {GeneratorKind::kBetaShift, 1, true});
  EXPECT_EQ(y.betas, (std::vector<double>{0.1 - kPi, 0.2, 0.3}));
  y = apply_generator(x, {GeneratorKind::kBetaNegateGammaShift, 2, false});
  EXPECT_EQ(y.betas, (std::vector<double>{0.1, -0.2, 0.3}));
  EXPECT_EQ(y.gammas, (std::vector<double>{1.0, 2.0 + kPi, 3.0 + kPi}));
  // At k = r there is no following gamma to shift.
  y = apply_generator(x, {GeneratorKind::kBetaNegateGammaShift, 3, false});
  EXPECT_EQ(y.betas, (std::vector<double>{0.1, 0.2, -0.3}));
  EXPECT_EQ(y.gammas, (std::vector<double>{1.0, 2.0, 3.0 + kPi}));
  y = apply_generator(x, {GeneratorKind::kGlobalNegate, 1, false});
  EXPECT_EQ(y.betas, (std::vector<double>{-0.1, -0.2, -0.3}));
  EXPECT_EQ(y.gammas, (std::vector<double>{-1.0, -2.0, -3.0}));
  EXPECT_THROW(apply_generator(x, {GeneratorKind::kBetaShift, 4, false}), std::out_of_range);
  EXPECT_THROW(apply_generator(x, {GeneratorKind::kBetaShift, 0, false}), std::out_of_range);
}

TEST(Symmetry, InversesUndoGenerators) {
  std::mt19937_64 rng(41);
  const Params x = random_params(3, rng);
  for (SymmetryGenerator g : all_generators(3)) {
    SymmetryGenerator inv = g;
    inv.inverse = !g.inverse;
    const Params y = apply_generator(apply_generator(x, g), inv);
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(y.betas[k], x.betas[k], 1e-14) << to_string(g);
      EXPECT_NEAR(y.gammas[k], x.gammas[k], 1e-14) << to_string(g);
    }
  }
  EXPECT_EQ(all_generators(3).size(), 10U);
}

class SymmetryLandscape : public ::testing::TestWithParam<int> {};

TEST_P(SymmetryLandscape, GeneratorsAndWordsLeaveValueUnchanged) {
  const int n = GetParam();
  std::mt19937_64 rng(42 + n);
  const SkInstance inst = random_instance(n, rng);
  const AnsatzCircuit c = build_swap_network(inst, 2);
  NoiseModel all_slots = NoiseModel::spatial(0.2, 0.3);
  all_slots.schedule = SlotSchedule::kAllSlots;
  all_slots.include_boundary_slot = true;
  all_slots.error_op = pauli_x();
  const std::vector<NoiseModel> models = {NoiseModel::none(), NoiseModel::temporal(0.1, 0.5),
                                          NoiseModel::spatial(0.1, 0.5), all_slots};
  for (const NoiseModel& m : models) {
    const NoisyLandscape l(inst, c, m);
    const LandscapeFn f = [&](const Params& x) { return l.value(x); };
    const Params x = random_params(2, rng);
    for (const SymmetryGenerator& g : all_generators(2)) {
      const InvarianceReport rep = check_invariance(f, x, g, 1e-10);
      EXPECT_TRUE(rep.pass) << rep.label << " residual " << rep.residual;
    }
    for (int w = 0; w < 5; ++w) {
      const auto word = random_word(2, 6, rng);
      EXPECT_TRUE(check_invariance(f, x, word, 1e-9).pass);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(EvenN, SymmetryLandscape, ::testing::Values(2, 4));

TEST(Symmetry, HoldsPerRealization) {
  std::mt19937_64 rng(43);
  const SkInstance inst = random_instance(4, rng);
  const AnsatzCircuit c = build_swap_network(inst, 2);
  const NoisyLandscape l(inst, c, NoiseModel::temporal(0.1, 0.5));
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Slot> excited;
    for (const Slot& s : l.grid().slots) {
      if (rng() % 4 == 0) excited.push_back(s);
    }
    const LandscapeFn f = [&](const Params& x) { return l.value_given_realization(x, excited); };
    const Params x = random_params(2, rng);
    for (const SymmetryGenerator& g : all_generators(2)) EXPECT_TRUE(check_invariance(f, x, g, 1e-10).pass);
  }
}

TEST(Symmetry, BetaNegationNeedsEvenQubitCount) {
  std::mt19937_64 rng(44);
  const SkInstance inst = random_instance(5, rng);
  const NoisyLandscape l(inst, build_swap_network(inst, 2), NoiseModel::none());
  const LandscapeFn f = [&](const Params& x) { return l.value(x); };
  const Params x = random_params(2, rng);
  EXPECT_FALSE(check_invariance(f, x, SymmetryGenerator{GeneratorKind::kBetaNegateGammaShift, 1, false}, 1e-6).pass);
  EXPECT_TRUE(check_invariance(f, x, SymmetryGenerator{GeneratorKind::kGlobalNegate, 1, false}, 1e-10).pass);
}

TEST(Symmetry, NonPauliErrorControl) {
  // Not asserted: the residual under a non-Pauli error is only recorded.
  std::mt19937_64 rng(45);
  const SkInstance inst = random_instance(4, rng);
  NoiseModel m = NoiseModel::temporal(0.1, 0.5);
  m.error_op = ry_matrix(0.3);
  const NoisyLandscape l(inst, build_swap_network(inst, 2), m);
  const LandscapeFn f = [&](const Params& x) { return l.value(x); };
  const InvarianceReport rep =
      check_invariance(f, random_params(2, rng), SymmetryGenerator{GeneratorKind::kBetaNegateGammaShift, 1, false}, 1e-9);
  RecordProperty("ry_residual", std::to_string(rep.residual));
}

}  // namespace
}  // namespace corrqaoa
