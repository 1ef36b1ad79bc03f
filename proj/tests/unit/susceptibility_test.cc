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


#include "corrqaoa/susceptibility.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "corrqaoa/ansatz.h"
#include "corrqaoa/gates.h"
#include "corrqaoa/noisy_executor.h"
#include "corrqaoa/sk_instance.h"
#include "oracle.h"

namespace corrqaoa {
namespace {

Params random_params(int r, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  Params x = Params::zeros(r);
  for (int k = 0; k < r; ++k) x.betas[k] = u(rng), x.gammas[k] = u(rng);
  return x;
}

NoiseModel model(bool temporal, double kappa, SlotSchedule schedule = SlotSchedule::kActiveGates,
                 bool boundary = false) {
  NoiseModel m = temporal ? NoiseModel::temporal(0.0, kappa) : NoiseModel::spatial(0.0, kappa);
  m.schedule = schedule;
  m.include_boundary_slot = boundary;
  return m;
}

TEST(Susceptibility, ChainSetSizes) {
  const SkInstance inst = parse_instance("+-+");
  const AnsatzCircuit c = build_swap_network(inst, 1);  // m = 4
  const SlotGrid g = build_slot_grid(c, model(true, 0.5, SlotSchedule::kAllSlots, true));
  const std::vector<ChainRealizationSet> sets = chain_sets(g);
  ASSERT_EQ(sets.size(), 5U);
  for (const ChainRealizationSet& s : sets) {
    EXPECT_EQ(s.members.size(), static_cast<std::size_t>(3 * (6 - s.length)));
    for (const ChainMember& mb : s.members) {
      EXPECT_EQ(static_cast<int>(mb.excited.size()), s.length);
      const int chain_len = 5;
      EXPECT_EQ(mb.boundary, (mb.first > 0) + (mb.first + mb.length < chain_len));
      for (const Slot& sl : mb.excited) EXPECT_EQ(sl.qubit, g.chains[mb.chain].label);
    }
  }
}

TEST(Susceptibility, MemberWeightsMatchRealizationDerivative) {
  const SkInstance inst = parse_instance("+-++-+-++-----+");
  const AnsatzCircuit c = build_swap_network(inst, 2);
  for (bool temporal : {true, false}) {
    for (double kappa : {0.0, 0.35, 1.0}) {
      const SlotGrid g = build_slot_grid(c, model(temporal, kappa));
      double total = 0.0;
      for (const ChainRealizationSet& s : chain_sets(g)) {
        for (const ChainMember& mb : s.members) {
          const SlotChain& ch = g.chains[mb.chain];
          std::vector<int> bits(ch.slots.size(), 0);
          for (int k = 0; k < mb.length; ++k) bits[mb.first + k] = 1;
          const double h = 1e-7;
          const double fd = (oracle::chain_probability(h, kappa, bits, ch.gaps) -
                             oracle::chain_probability(-h, kappa, bits, ch.gaps)) / (2 * h);
          EXPECT_NEAR(member_weight(g, mb, kappa), fd, 1e-7);
          total += member_weight(g, mb, kappa);
        }
      }
      // The all-zero realization carries the rest: d/dp of (1-p) prod(1 - p(1 - kappa^gap)).
      double zero = 0.0;
      for (const SlotChain& ch : g.chains) {
        zero -= 1.0;
        for (int gap : ch.gaps) zero -= 1.0 - std::pow(kappa, gap);
      }
      const SusceptibilityReport rep = chi_exact(inst, c, Params{{0.1, 0.2}, {0.3, 0.4}}, model(temporal, kappa));
      EXPECT_NEAR(rep.zero_coefficient, zero, 1e-12);
      EXPECT_NEAR(rep.zero_coefficient, -total, 1e-12);
    }
  }
}

TEST(Susceptibility, MatchesDerivativeOfMixture) {
  std::mt19937_64 rng(31);
  const SkInstance inst = random_instance(3, rng);
  const AnsatzCircuit c = build_swap_network(inst, 1);
  const Params x = random_params(1, rng);
  for (bool temporal : {true, false}) {
    for (double kappa : {0.0, 0.5, 1.0}) {
      const NoiseModel m = model(temporal, kappa);
      std::vector<std::pair<int, int>> slots;
      for (const Slot& s : build_slot_grid(c, m).slots) slots.push_back({s.qubit, s.time});
      const double h = 1e-4;
      const double fd = (oracle::mixture(inst, c, x, slots, temporal, h, kappa, {}) -
                         oracle::mixture(inst, c, x, slots, temporal, -h, kappa, {})) / (2 * h);
      EXPECT_NEAR(chi_exact(inst, c, x, m).chi, fd, 1e-6);
    }
  }
}

TEST(Susceptibility, AgreesWithRichardsonDifference) {
  std::mt19937_64 rng(32);
  const SkInstance inst = random_instance(4, rng);
  const AnsatzCircuit c = build_swap_network(inst, 2);
  const Params x = random_params(2, rng);
  for (bool temporal : {true, false}) {
    const NoiseModel m = model(temporal, 0.5);
    const double exact = chi_exact(inst, c, x, m).chi;
    const double fd = chi_finite_difference(inst, c, x, m, 1e-3);
    EXPECT_LE(std::abs(exact - fd), 1e-4 * std::abs(exact));
  }
}

TEST(Susceptibility, UncorrelatedLimitIsSumOverSlots) {
  std::mt19937_64 rng(33);
  const SkInstance inst = random_instance(4, rng);
  const AnsatzCircuit c = build_swap_network(inst, 2);
  const Params x = random_params(2, rng);
  const NoiseModel m = model(true, 0.0, SlotSchedule::kAllSlots, true);
  const NoisyLandscape l(inst, c, m);
  double expected = 0.0;
  for (const Slot& s : l.grid().slots) expected += l.value_given_realization(x, {&s, 1}) - l.value(x);
  const SusceptibilityReport rep = chi_exact(l, x);
  EXPECT_NEAR(rep.chi, expected, 1e-11);
  EXPECT_EQ(rep.terms.front().length, 1);
  EXPECT_EQ(rep.terms.front().count, l.grid().size());
}

TEST(Susceptibility, FullyCorrelatedLimitIsSumOverChains) {
  std::mt19937_64 rng(34);
  const SkInstance inst = random_instance(4, rng);
  const AnsatzCircuit c = build_swap_network(inst, 2);
  const Params x = random_params(2, rng);
  for (bool temporal : {true, false}) {
    const NoisyLandscape l(inst, c, model(temporal, 1.0, SlotSchedule::kAllSlots, true));
    const double h0 = l.value(x);
    double expected = 0.0;
    for (const SlotChain& ch : l.grid().chains) expected += l.value_given_realization(x, ch.slots) - h0;
    EXPECT_NEAR(chi_exact(l, x).chi, expected, 1e-11);
  }
}

TEST(Susceptibility, IdentityErrorHasNoEffect) {
  std::mt19937_64 rng(35);
  const SkInstance inst = random_instance(4, rng);
  const AnsatzCircuit c = build_swap_network(inst, 2);
  NoiseModel m = model(true, 0.6);
  m.error_op = identity2();
  const Params x = random_params(2, rng);
  EXPECT_NEAR(chi_exact(inst, c, x, m).chi, 0.0, 1e-12);
  EXPECT_NEAR(chi_finite_difference(inst, c, x, m, 1e-3), 0.0, 1e-9);
}

TEST(Susceptibility, LinearizedAr) {
  EXPECT_DOUBLE_EQ(linearized_ar(0.8, 2.0, -7.0, 0.01), 0.8 - 0.02 / 7.0);
  EXPECT_THROW(linearized_ar(0.8, 2.0, 0.0, 0.01), std::domain_error);
  const SkInstance inst = parse_instance("+");
  const AnsatzCircuit c = build_swap_network(inst, 1);
  EXPECT_THROW(chi_finite_difference(inst, c, Params::zeros(1), model(true, 0.5), 0.0), std::domain_error);
  EXPECT_THROW(chi_finite_difference(inst, c, Params::zeros(1), model(true, 0.5), 0.01), std::domain_error);
}

}  // namespace
}  // namespace corrqaoa
