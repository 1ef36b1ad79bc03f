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

#ifndef CORRQAOA_ANSATZ_H_
#define CORRQAOA_ANSATZ_H_

#include <span>
#include <vector>

#include "corrqaoa/gates.h"
#include "corrqaoa/sk_instance.h"

namespace corrqaoa {

/// QAOA angles for r cycles. The flat layout used by optimizers is
/// (beta_1, ..., beta_r, gamma_1, ..., gamma_r).
struct Params {
  std::vector<double> betas;
  std::vector<double> gammas;

  int cycles() const { return static_cast<int>(betas.size()); }
  std::vector<double> flat() const;
  static Params from_flat(std::span<const double> flat);
  static Params zeros(int r) { return {std::vector<double>(r, 0.0), std::vector<double>(r, 0.0)}; }
};

enum class LayerKind { kCost, kMixer };

/// One gate of the ansatz template. Cost gates are RZZ'(weight * gamma_k) on
/// physical qubits (a, b); mixer gates are RX(beta_k) on qubit a.
struct AnsatzGate {
  int a = 0;
  int b = -1;
  int weight = 0;
};

struct AnsatzLayer {
  LayerKind kind = LayerKind::kCost;
  int cycle = 0;  // 0-based
  std::vector<AnsatzGate> gates;
  /// Qubits touched by an RZZ' (or RZ) gate in this layer, ascending.
  std::vector<int> active_qubits;
};

/// Layered SWAP-network implementation of the QAOA ansatz. Layer t (1-based
/// time, 1..depth()) is layers()[t - 1].
class AnsatzCircuit {
 public:
  AnsatzCircuit(int n_qubits, int cycles, std::vector<AnsatzLayer> layers,
                std::vector<std::vector<int>> cycle_permutations);

  int num_qubits() const { return n_qubits_; }
  int cycles() const { return cycles_; }
  int depth() const { return static_cast<int>(layers_.size()); }
  const std::vector<AnsatzLayer>& layers() const { return layers_; }
  const AnsatzLayer& layer(int t) const { return layers_.at(static_cast<std::size_t>(t - 1)); }

  /// Logical qubit held by each physical position after cycle k (0-based).
  const std::vector<std::vector<int>>& cycle_permutations() const { return cycle_permutations_; }
  const std::vector<int>& final_permutation() const { return cycle_permutations_.back(); }

  /// Concrete gates of layer t (1-based) at the given angles.
  std::vector<QubitGate> bind_layer(int t, const Params& params) const;
  /// Index of the first layer whose gates depend on flat parameter `index`.
  int first_layer_of_parameter(int index) const;

 private:
  int n_qubits_;
  int cycles_;
  std::vector<AnsatzLayer> layers_;
  std::vector<std::vector<int>> cycle_permutations_;
};

/// Brickwork SWAP network: each cycle is n RZZ' layers alternating between
/// pairs (0,1)(2,3)... and (1,2)(3,4)..., followed by one RX layer. The list
/// of logical labels is updated at every SWAP so every logical pair meets
/// exactly once per cycle, and each cycle reverses the qubit order.
AnsatzCircuit build_swap_network(const SkInstance& instance, int cycles);

}  // namespace corrqaoa

#endif  // CORRQAOA_ANSATZ_H_
