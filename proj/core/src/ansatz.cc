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

#include <stdexcept>
#include <utility>

namespace corrqaoa {

std::vector<double> Params::flat() const {
  std::vector<double> out(betas);
  out.insert(out.end(), gammas.begin(), gammas.end());
  return out;
}

Params Params::from_flat(std::span<const double> flat) {
  if (flat.size() % 2 != 0) throw std::invalid_argument("flat parameter vector must have even length");
  const std::size_t r = flat.size() / 2;
  return {std::vector<double>(flat.begin(), flat.begin() + r),
          std::vector<double>(flat.begin() + r, flat.end())};
}

AnsatzCircuit::AnsatzCircuit(int n_qubits, int cycles, std::vector<AnsatzLayer> layers,
                             std::vector<std::vector<int>> cycle_permutations)
    : n_qubits_(n_qubits),
      cycles_(cycles),
      layers_(std::move(layers)),
      cycle_permutations_(std::move(cycle_permutations)) {}

std::vector<QubitGate> AnsatzCircuit::bind_layer(int t, const Params& params) const {
  if (params.cycles() != cycles_ || params.gammas.size() != params.betas.size()) {
    throw std::invalid_argument("parameter count does not match the circuit's cycle count");
  }
  const AnsatzLayer& l = layer(t);
  std::vector<QubitGate> gates;
  gates.reserve(l.gates.size());
  if (l.kind == LayerKind::kCost) {
    const double gamma = params.gammas[l.cycle];
    for (const AnsatzGate& g : l.gates) gates.push_back(QubitGate::rzz_swap(g.a, g.b, g.weight * gamma));
  } else {
    const double beta = params.betas[l.cycle];
    for (const AnsatzGate& g : l.gates) gates.push_back(QubitGate::rx(g.a, beta));
  }
  return gates;
}

int AnsatzCircuit::first_layer_of_parameter(int index) const {
  if (index < 0 || index >= 2 * cycles_) throw std::out_of_range("parameter index out of range");
  const bool is_beta = index < cycles_;
  const int cycle = is_beta ? index : index - cycles_;
  for (int t = 1; t <= depth(); ++t) {
    const AnsatzLayer& l = layer(t);
    if (l.cycle == cycle && (l.kind == LayerKind::kMixer) == is_beta) return t;
  }
  throw std::logic_error("parameter does not appear in the circuit");
}

AnsatzCircuit build_swap_network(const SkInstance& instance, int cycles) {
  const int n = instance.num_qubits();
  if (cycles < 1) throw std::invalid_argument("need at least one cycle");
  std::vector<int> labels = identity_permutation(n);
  std::vector<AnsatzLayer> layers;
  std::vector<std::vector<int>> perms;
  for (int k = 0; k < cycles; ++k) {
    for (int sub = 0; sub < n; ++sub) {
      AnsatzLayer layer;
      layer.kind = LayerKind::kCost;
      layer.cycle = k;
      for (int a = sub % 2; a + 1 < n; a += 2) {
        layer.gates.push_back({a, a + 1, instance.weight(labels[a], labels[a + 1])});
        layer.active_qubits.push_back(a);
        layer.active_qubits.push_back(a + 1);
        std::swap(labels[a], labels[a + 1]);
      }
      layers.push_back(std::move(layer));
    }
    AnsatzLayer mixer;
    mixer.kind = LayerKind::kMixer;
    mixer.cycle = k;
    for (int q = 0; q < n; ++q) mixer.gates.push_back({q, -1, 0});
    layers.push_back(std::move(mixer));
    perms.push_back(labels);
  }
  return AnsatzCircuit(n, cycles, std::move(layers), std::move(perms));
}

}  // namespace corrqaoa
