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


#include "corrqaoa/ansatz.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "corrqaoa/sk_instance.h"

namespace corrqaoa {
namespace {

std::set<std::pair<int, int>> pairs_met(const AnsatzCircuit& c, int cycle, std::vector<int>& label) {
  std::set<std::pair<int, int>> met;
  for (const AnsatzLayer& layer : c.layers()) {
    if (layer.cycle != cycle || layer.kind != LayerKind::kCost) continue;
    for (const AnsatzGate& g : layer.gates) {
      met.insert(std::minmax(label[g.a], label[g.b]));
      std::swap(label[g.a], label[g.b]);
    }
  }
  return met;
}

TEST(Ansatz, TypicalCircuitStructure) {
  const SkInstance inst = parse_instance("+-++-+-++-----+");
  const AnsatzCircuit c = build_swap_network(inst, 3);
  EXPECT_EQ(c.depth(), 21);
  std::vector<int> label = identity_permutation(6);
  for (int k = 0; k < 3; ++k) {
    int gates = 0;
    for (const AnsatzLayer& layer : c.layers()) {
      if (layer.cycle == k && layer.kind == LayerKind::kCost) gates += static_cast<int>(layer.gates.size());
    }
    EXPECT_EQ(gates, 15);
    EXPECT_EQ(pairs_met(c, k, label).size(), 15U);
    EXPECT_EQ(label, c.cycle_permutations()[k]);
  }
  EXPECT_EQ(c.cycle_permutations()[0], (std::vector<int>{5, 4, 3, 2, 1, 0}));
  EXPECT_EQ(c.cycle_permutations()[1], identity_permutation(6));
  EXPECT_EQ(c.final_permutation(), c.cycle_permutations()[0]);
}

TEST(Ansatz, EveryPairOncePerCycle) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 9; ++n) {
    const SkInstance inst = random_instance(n, rng);
    const AnsatzCircuit c = build_swap_network(inst, 2);
    EXPECT_EQ(c.depth(), 2 * (n + 1));
    std::vector<int> label = identity_permutation(n);
    for (int k = 0; k < 2; ++k) EXPECT_EQ(pairs_met(c, k, label).size(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST(Ansatz, LayerShapeAndWeights) {
  const SkInstance inst = parse_instance("+-++-+-++-----+");
  const AnsatzCircuit c = build_swap_network(inst, 2);
  std::vector<int> label = identity_permutation(6);
  for (int t = 1; t <= c.depth(); ++t) {
    const AnsatzLayer& layer = c.layer(t);
    if (layer.kind == LayerKind::kMixer) {
      EXPECT_EQ(layer.gates.size(), 6U);
      EXPECT_TRUE(layer.active_qubits.empty());
      continue;
    }
    std::set<int> touched;
    for (const AnsatzGate& g : layer.gates) {
      EXPECT_EQ(g.b, g.a + 1);
      EXPECT_EQ(g.weight, inst.weight(label[g.a], label[g.b]));
      std::swap(label[g.a], label[g.b]);
      touched.insert(g.a), touched.insert(g.b);
    }
    EXPECT_EQ(std::vector<int>(touched.begin(), touched.end()), layer.active_qubits);
  }
}

TEST(Ansatz, ParamsFlatLayoutAndFirstLayer) {
  const Params x{{0.1, 0.2, 0.3}, {1.1, 1.2, 1.3}};
  EXPECT_EQ(x.flat(), (std::vector<double>{0.1, 0.2, 0.3, 1.1, 1.2, 1.3}));
  const Params y = Params::from_flat(x.flat());
  EXPECT_EQ(y.betas, x.betas);
  EXPECT_EQ(y.gammas, x.gammas);
  const AnsatzCircuit c = build_swap_network(parse_instance("+-++-+-++-----+"), 3);
  // Cycle k occupies layers 7k+1..7k+7; RX is the last one.
  EXPECT_EQ(c.first_layer_of_parameter(0), 7);
  EXPECT_EQ(c.first_layer_of_parameter(2), 21);
  EXPECT_EQ(c.first_layer_of_parameter(3), 1);
  EXPECT_EQ(c.first_layer_of_parameter(5), 15);
}

}  // namespace
}  // namespace corrqaoa
